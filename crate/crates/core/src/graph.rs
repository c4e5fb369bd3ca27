//! Mutable simple undirected graph with stable vertex identifiers.
//!
//! Vertices are addressed by [`VertexId`]. Ids survive every edit and are
//! never handed out twice by the same graph, so journals that mention a
//! deleted vertex stay unambiguous.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Vertex set used throughout for covers; ordered so output is deterministic.
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    // Neighbor lists are kept sorted and duplicate free.
    adj: BTreeMap<VertexId, Vec<VertexId>>,
    num_edges: usize,
    next_id: u32,
    // Set by the first deletion; from then on ids below `next_id` may name
    // retired vertices and `ensure_vertex` refuses them.
    has_removed: bool,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one;
    /// a self-loop is rejected.
    pub fn from_edges<I, V>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (V, V)>,
        V: Into<VertexId>,
    {
        let mut g = Graph::new();
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.ensure_vertex(a);
            g.ensure_vertex(b);
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph with the given isolated vertices plus edges.
    pub fn from_parts<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::from_edges(edges)?;
        for v in vertices {
            g.ensure_vertex(v);
        }
        Ok(g)
    }

    /// Inserts `v` if it is not already live. Returns true if it was added.
    ///
    /// Only meant for construction: ids below the high-water mark that were
    /// deleted must not be revived, and this panics if asked to.
    pub fn ensure_vertex(&mut self, v: VertexId) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        assert!(
            v.0 >= self.next_id || !self.has_removed,
            "vertex id {v} may have been used by this graph"
        );
        self.adj.insert(v, Vec::new());
        self.next_id = self.next_id.max(v.0 + 1);
        true
    }

    /// Creates a fresh vertex with an id never used before in this graph.
    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_id);
        self.next_id += 1;
        self.adj.insert(v, Vec::new());
        v
    }

    /// Adds edge {a, b}. Returns Ok(false) if it was already present.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<bool> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.require(a)?;
        self.require(b)?;
        let na = self.adj.get_mut(&a).unwrap();
        match na.binary_search(&b) {
            Ok(_) => return Ok(false),
            Err(pos) => na.insert(pos, b),
        }
        let nb = self.adj.get_mut(&b).unwrap();
        let pos = nb.binary_search(&a).unwrap_err();
        nb.insert(pos, a);
        self.num_edges += 1;
        Ok(true)
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<bool> {
        self.require(a)?;
        self.require(b)?;
        let na = self.adj.get_mut(&a).unwrap();
        let Ok(pos) = na.binary_search(&b) else {
            return Ok(false);
        };
        na.remove(pos);
        let nb = self.adj.get_mut(&b).unwrap();
        let pos = nb.binary_search(&a).unwrap();
        nb.remove(pos);
        self.num_edges -= 1;
        Ok(true)
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        let nbrs = self.adj.remove(&v).ok_or(Error::DeadVertex(v))?;
        self.has_removed = true;
        for w in &nbrs {
            let nw = self.adj.get_mut(w).unwrap();
            let pos = nw.binary_search(&v).unwrap();
            nw.remove(pos);
        }
        self.num_edges -= nbrs.len();
        Ok(())
    }

    pub fn remove_vertices<'a, I>(&mut self, vs: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        for &v in vs {
            if self.contains(v) {
                self.remove_vertex(v)?;
            }
        }
        Ok(())
    }

    /// Merges `absorb` into `keep`: every edge of `absorb` is re-homed onto
    /// `keep` (parallel edges collapse, the edge between them disappears) and
    /// `absorb` is deleted.
    pub fn contract_pair(&mut self, keep: VertexId, absorb: VertexId) -> Result<()> {
        if keep == absorb {
            return Err(Error::Contract(format!(
                "cannot contract vertex {keep} with itself"
            )));
        }
        self.require(keep)?;
        let nbrs = self
            .adj
            .get(&absorb)
            .ok_or(Error::DeadVertex(absorb))?
            .clone();
        self.remove_vertex(absorb)?;
        for w in nbrs {
            if w != keep {
                self.add_edge(keep, w)?;
            }
        }
        Ok(())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    fn require(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::DeadVertex(v))
        }
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adj
            .get(&a)
            .is_some_and(|n| n.binary_search(&b).is_ok())
    }

    /// Degree of a live vertex. Panics on a dead id.
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Sorted neighbor list of a live vertex. Panics on a dead id.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        match self.adj.get(&v) {
            Some(n) => n,
            None => panic!("vertex {v} is not in the graph"),
        }
    }

    pub fn try_neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.adj
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(Error::DeadVertex(v))
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut set: VertexSet = self.neighbors(v).iter().copied().collect();
        set.insert(v);
        set
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(Vec::len).min().unwrap_or(0)
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Every edge once, as (smaller id, larger id), in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&a, n)| n.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// One past the largest id ever issued; fresh ids start here.
    pub fn id_bound(&self) -> u32 {
        self.next_id
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for s in self.vertices() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn num_components(&self) -> usize {
        self.connected_components().len()
    }

    /// True for the empty graph as well.
    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.num_edges + self.num_components() == self.num_vertices()
    }

    /// Subgraph induced by `keep`; ids are preserved, as is the id high-water
    /// mark so fresh vertices never collide with the parent's.
    pub fn induced_subgraph<'a, I>(&self, keep: I) -> Graph
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let keep: BTreeSet<VertexId> = keep
            .into_iter()
            .copied()
            .filter(|&v| self.contains(v))
            .collect();
        let mut adj = BTreeMap::new();
        let mut twice = 0;
        for &v in &keep {
            let n: Vec<VertexId> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|w| keep.contains(w))
                .collect();
            twice += n.len();
            adj.insert(v, n);
        }
        Graph {
            adj,
            num_edges: twice / 2,
            next_id: self.next_id,
            has_removed: true,
        }
    }

    /// Graph with `removed` deleted; the snapshot-and-edit idiom used by the
    /// search.
    pub fn without<'a, I>(&self, removed: I) -> Graph
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let mut g = self.clone();
        for v in removed {
            if g.contains(*v) {
                g.remove_vertex(*v).unwrap();
            }
        }
        g
    }

    pub fn degree_sum(&self) -> usize {
        self.adj.values().map(Vec::len).sum()
    }

    /// Checks symmetry, sortedness, absence of loops and the edge counter.
    pub fn check_invariants(&self) -> bool {
        let mut twice = 0;
        for (&v, n) in &self.adj {
            if n.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &w in n {
                if w == v || !self.has_edge(w, v) {
                    return false;
                }
            }
            twice += n.len();
        }
        twice == 2 * self.num_edges && self.adj.keys().all(|v| v.0 < self.next_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn triangle() -> Graph {
        Graph::from_edges([(0u32, 1u32), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn from_edges_basic_shapes() {
        let g = Graph::from_edges(Vec::<(u32, u32)>::new()).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (0, 0));

        let g = triangle();
        assert_eq!((g.num_vertices(), g.num_edges()), (3, 3));

        let g = Graph::from_edges([(0u32, 1u32), (0, 1)]).unwrap();
        assert_eq!(g.num_edges(), 1);
        assert!(g.check_invariants());
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            Graph::from_edges([(3u32, 3u32)]),
            Err(Error::SelfLoop(_))
        ));
    }

    #[test]
    fn remove_vertex_cases() {
        let mut g = triangle();
        g.remove_vertex(v(0)).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 1));

        let mut star = Graph::from_edges([(0u32, 1u32), (0, 2), (0, 3)]).unwrap();
        star.remove_vertex(v(0)).unwrap();
        assert_eq!((star.num_vertices(), star.num_edges()), (3, 0));

        let mut k4 =
            Graph::from_edges([(0u32, 1u32), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        k4.remove_vertex(v(3)).unwrap();
        assert_eq!(
            k4.edges().collect::<Vec<_>>(),
            triangle().edges().collect::<Vec<_>>()
        );
        assert!(matches!(k4.remove_vertex(v(3)), Err(Error::DeadVertex(_))));
    }

    #[test]
    fn contract_cases() {
        let mut p = Graph::from_edges([(0u32, 1u32)]).unwrap();
        p.contract_pair(v(0), v(1)).unwrap();
        assert_eq!((p.num_vertices(), p.num_edges()), (1, 0));

        // square a-b-c-d-a with a=0, b=1, c=2, d=3
        let mut sq = Graph::from_edges([(0u32, 1u32), (1, 2), (2, 3), (3, 0)]).unwrap();
        sq.contract_pair(v(0), v(2)).unwrap();
        assert_eq!(sq.num_edges(), 2);
        assert_eq!(sq.neighbors(v(0)), &[v(1), v(3)]);
        assert_eq!(sq.degree(v(1)), 1);
        assert_eq!(sq.degree(v(3)), 1);

        let mut t = triangle();
        t.contract_pair(v(0), v(1)).unwrap();
        assert_eq!((t.num_vertices(), t.num_edges()), (2, 1));
        assert!(t.check_invariants());

        assert!(t.contract_pair(v(0), v(0)).is_err());
    }

    #[test]
    fn fresh_ids_never_reused() {
        let mut g = triangle();
        g.remove_vertex(v(2)).unwrap();
        let fresh = g.add_vertex();
        assert_eq!(fresh, v(3));
        g.remove_vertex(fresh).unwrap();
        assert_eq!(g.add_vertex(), v(4));
    }

    #[test]
    fn components_and_forest() {
        let g = Graph::from_parts([v(9)], [(v(0), v(1)), (v(2), v(3)), (v(3), v(4))]).unwrap();
        let comps = g.connected_components();
        assert_eq!(
            comps,
            vec![vec![v(0), v(1)], vec![v(2), v(3), v(4)], vec![v(9)]]
        );
        assert!(g.is_forest());
        assert!(!g.is_connected());
        assert!(!triangle().is_forest());
        assert!(Graph::new().is_connected());
    }

    #[test]
    fn closed_neighborhood_and_degrees() {
        let g = Graph::from_edges([(0u32, 1u32), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert_eq!(
            g.closed_neighborhood(v(1)),
            [v(0), v(1), v(2)].into_iter().collect()
        );
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(g.degree_sum(), 2 * g.num_edges());
        assert_eq!(g.edges().count(), 4);
    }
}
