//! Hopcroft–Karp maximum matching and König's minimum vertex cover for
//! bipartite graphs.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Bipartite graph given by adjacency from left vertices to right vertices.
#[derive(Clone, Debug)]
pub struct Bipartite {
    pub right: usize,
    pub adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Matching {
    /// Partner of each left vertex, `None` if unmatched.
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub size: usize,
}

impl Bipartite {
    pub fn new(left: usize, right: usize) -> Self {
        Bipartite {
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        self.adj[l].push(r);
    }

    pub fn left(&self) -> usize {
        self.adj.len()
    }

    /// Maximum matching in O(m √n).
    pub fn maximum_matching(&self) -> Matching {
        let nl = self.left();
        let mut match_l = vec![FREE; nl];
        let mut match_r = vec![FREE; self.right];
        let mut dist = vec![0usize; nl];
        let mut size = 0;
        loop {
            // BFS layers from free left vertices
            let mut queue = VecDeque::new();
            for l in 0..nl {
                if match_l[l] == FREE {
                    dist[l] = 0;
                    queue.push_back(l);
                } else {
                    dist[l] = FREE;
                }
            }
            let mut found = false;
            while let Some(l) = queue.pop_front() {
                for &r in &self.adj[l] {
                    let l2 = match_r[r];
                    if l2 == FREE {
                        found = true;
                    } else if dist[l2] == FREE {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                }
            }
            if !found {
                break;
            }
            let mut it = vec![0usize; nl];
            for l in 0..nl {
                if match_l[l] == FREE
                    && self.augment(l, &mut match_l, &mut match_r, &mut dist, &mut it)
                {
                    size += 1;
                }
            }
        }
        Matching {
            left: match_l.iter().map(|&r| (r != FREE).then_some(r)).collect(),
            right: match_r.iter().map(|&l| (l != FREE).then_some(l)).collect(),
            size,
        }
    }

    fn augment(
        &self,
        l: usize,
        match_l: &mut [usize],
        match_r: &mut [usize],
        dist: &mut [usize],
        it: &mut [usize],
    ) -> bool {
        while it[l] < self.adj[l].len() {
            let r = self.adj[l][it[l]];
            it[l] += 1;
            let l2 = match_r[r];
            if l2 == FREE
                || (dist[l2] == dist[l] + 1 && self.augment(l2, match_l, match_r, dist, it))
            {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = FREE;
        false
    }

    /// Minimum vertex cover from a maximum matching (König): with Z the
    /// vertices reachable from free left vertices by alternating paths, the
    /// cover is (left \ Z) ∪ (right ∩ Z). Returns membership flags.
    pub fn konig_cover(&self, m: &Matching) -> (Vec<bool>, Vec<bool>) {
        let nl = self.left();
        let mut seen_l = vec![false; nl];
        let mut seen_r = vec![false; self.right];
        let mut stack: Vec<usize> = (0..nl).filter(|&l| m.left[l].is_none()).collect();
        for &l in &stack {
            seen_l[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &self.adj[l] {
                if seen_r[r] || m.left[l] == Some(r) {
                    continue;
                }
                seen_r[r] = true;
                if let Some(l2) = m.right[r] {
                    if !seen_l[l2] {
                        seen_l[l2] = true;
                        stack.push(l2);
                    }
                }
            }
        }
        (seen_l.iter().map(|&s| !s).collect(), seen_r)
    }
}
