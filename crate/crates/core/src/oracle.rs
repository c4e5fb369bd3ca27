//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the solver paths it is used to check:
//! minimum covers come from exhaustive enumeration of independent sets,
//! real-cycle numbers from explicit cycle lists. Every routine is guarded
//! and reports [`Error::ResourceLimit`] rather than running away.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

pub const MAX_BRUTE_FORCE_VERTICES: usize = 26;
pub const MAX_SIMPLE_CYCLES: usize = 100_000;
pub const MAX_REAL_CYCLE_VERTICES: usize = 12;
/// Cap on simple cycles fed to the ordering search.
pub const MAX_REAL_CYCLE_INPUT: usize = 4_000;
/// Cap on memoized covered-edge states in the ordering search.
pub const MAX_REAL_CYCLE_STATES: usize = 2_000_000;

/// Dense 0..n relabelling of a graph's live vertices.
struct Dense {
    ids: Vec<VertexId>,
    nbr: Vec<Vec<usize>>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let pos = |v: VertexId| ids.binary_search(&v).unwrap();
        let nbr = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().map(|&w| pos(w)).collect())
            .collect();
        Dense { ids, nbr }
    }
}

pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    g.edges().all(|(a, b)| s.contains(&a) || s.contains(&b))
}

/// Minimum vertex cover by exhaustive search over independent sets: every
/// vertex is branched on (in or out), except that a vertex with no remaining
/// neighbor is always taken.
pub fn min_vc_bruteforce(g: &Graph) -> Result<(usize, VertexSet)> {
    let n = g.num_vertices();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "brute force limited to {MAX_BRUTE_FORCE_VERTICES} vertices, got {n}"
        )));
    }
    let d = Dense::new(g);
    let closed: Vec<u32> = (0..n)
        .map(|i| d.nbr[i].iter().fold(1u32 << i, |m, &j| m | 1 << j))
        .collect();

    fn mis(cand: u32, closed: &[u32]) -> u32 {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u32 << v;
        let take = bit | mis(cand & !closed[v], closed);
        if closed[v] & cand == bit {
            return take;
        }
        let skip = mis(cand & !bit, closed);
        if skip.count_ones() > take.count_ones() {
            skip
        } else {
            take
        }
    }

    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let independent = mis(all, &closed);
    let cover: VertexSet = (0..n)
        .filter(|&i| independent & (1 << i) == 0)
        .map(|i| d.ids[i])
        .collect();
    Ok((cover.len(), cover))
}

/// A simple cycle as a vertex sequence in canonical orientation: the
/// smallest id first, then the smaller of its two neighbors on the cycle.
pub type Cycle = Vec<VertexId>;

/// Every simple cycle of length at least three, each exactly once, in
/// canonical orientation and deterministic order.
pub fn enumerate_simple_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    let d = Dense::new(g);
    let n = d.ids.len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; n];

    fn extend(
        d: &Dense,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        for &w in &d.nbr[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
                if out.len() > MAX_SIMPLE_CYCLES {
                    return Err(Error::ResourceLimit(format!(
                        "more than {MAX_SIMPLE_CYCLES} simple cycles"
                    )));
                }
            }
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(d, start, path, on_path, out)?;
                path.pop();
                on_path[w] = false;
            }
        }
        Ok(())
    }

    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        extend(&d, s, &mut path, &mut on_path, &mut out)?;
        on_path[s] = false;
    }
    Ok(out
        .into_iter()
        .map(|c| c.into_iter().map(|i| d.ids[i]).collect())
        .collect())
}

fn cycle_edges(c: &Cycle) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    (0..c.len()).map(move |i| {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        (a.min(b), a.max(b))
    })
}

/// A real-cycle list: each cycle after the first owns an edge that no
/// earlier cycle uses. `fresh_edges[i]` is that witness edge for cycle `i`
/// (for the first cycle, any of its edges).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CycleList {
    pub cycles: Vec<Cycle>,
    pub fresh_edges: Vec<(VertexId, VertexId)>,
}

impl CycleList {
    /// Checks simplicity of every cycle and the fresh-edge witnesses.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.cycles.len() != self.fresh_edges.len() {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        for (c, &fresh) in self.cycles.iter().zip(&self.fresh_edges) {
            let distinct: std::collections::BTreeSet<_> = c.iter().collect();
            if c.len() < 3 || distinct.len() != c.len() {
                return false;
            }
            let edges: Vec<_> = cycle_edges(c).collect();
            if edges.iter().any(|&(a, b)| !g.has_edge(a, b)) {
                return false;
            }
            if !edges.contains(&fresh) || seen.contains(&fresh) {
                return false;
            }
            seen.extend(edges);
        }
        true
    }
}

struct EdgeMasks {
    masks: Vec<u128>,
    edges: Vec<(VertexId, VertexId)>,
}

fn edge_masks(g: &Graph, cycles: &[Cycle]) -> EdgeMasks {
    let edges: Vec<_> = g.edges().collect();
    let index: HashMap<_, _> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let masks = cycles
        .iter()
        .map(|c| cycle_edges(c).fold(0u128, |m, e| m | 1u128 << index[&e]))
        .collect();
    EdgeMasks { masks, edges }
}

fn first_fresh(mask: u128, covered: u128, edges: &[(VertexId, VertexId)]) -> (VertexId, VertexId) {
    edges[(mask & !covered).trailing_zeros() as usize]
}

/// Maximum real-cycle list by exhaustive search over cycle orderings,
/// memoized on the set of edges already used.
pub fn max_real_cycle_bruteforce(g: &Graph) -> Result<(usize, CycleList)> {
    if g.num_vertices() > MAX_REAL_CYCLE_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "real-cycle search limited to {MAX_REAL_CYCLE_VERTICES} vertices"
        )));
    }
    let cycles = enumerate_simple_cycles(g)?;
    if cycles.len() > MAX_REAL_CYCLE_INPUT {
        return Err(Error::ResourceLimit(format!(
            "{} simple cycles exceed the ordering-search cap of {MAX_REAL_CYCLE_INPUT}",
            cycles.len()
        )));
    }
    let em = edge_masks(g, &cycles);
    // Cycles with identical edge sets are interchangeable.
    let mut distinct: Vec<usize> = Vec::new();
    {
        let mut seen = std::collections::HashSet::new();
        for (i, &m) in em.masks.iter().enumerate() {
            if seen.insert(m) {
                distinct.push(i);
            }
        }
    }

    struct Search<'a> {
        masks: &'a [u128],
        order: &'a [usize],
        memo: HashMap<u128, (usize, Option<usize>)>,
    }

    impl Search<'_> {
        fn best(&mut self, covered: u128) -> Result<usize> {
            if let Some(&(b, _)) = self.memo.get(&covered) {
                return Ok(b);
            }
            if self.memo.len() >= MAX_REAL_CYCLE_STATES {
                return Err(Error::ResourceLimit(format!(
                    "real-cycle search exceeded {MAX_REAL_CYCLE_STATES} states"
                )));
            }
            let mut best = (0, None);
            for &c in self.order {
                let m = self.masks[c];
                if m & !covered == 0 {
                    continue;
                }
                let val = 1 + self.best(covered | m)?;
                if val > best.0 {
                    best = (val, Some(c));
                }
            }
            self.memo.insert(covered, best);
            Ok(best.0)
        }
    }

    let mut search = Search {
        masks: &em.masks,
        order: &distinct,
        memo: HashMap::new(),
    };
    let count = search.best(0)?;

    let mut list = CycleList::default();
    let mut covered = 0u128;
    while let Some(&(_, Some(c))) = search.memo.get(&covered) {
        list.fresh_edges
            .push(first_fresh(em.masks[c], covered, &em.edges));
        list.cycles.push(cycles[c].clone());
        covered |= em.masks[c];
    }
    debug_assert_eq!(list.cycles.len(), count);
    Ok((count, list))
}

/// Greedy real-cycle list: scan the simple cycles in enumeration order and
/// keep each one that still brings a fresh edge, repeating until a full pass
/// adds nothing.
pub fn greedy_real_cycles(g: &Graph) -> Result<CycleList> {
    if g.num_edges() > 128 {
        return Err(Error::ResourceLimit(
            "greedy real-cycle scan limited to 128 edges".into(),
        ));
    }
    let cycles = enumerate_simple_cycles(g)?;
    let em = edge_masks(g, &cycles);
    let mut list = CycleList::default();
    let mut covered = 0u128;
    for (c, &m) in em.masks.iter().enumerate() {
        if m & !covered != 0 {
            list.fresh_edges.push(first_fresh(m, covered, &em.edges));
            list.cycles.push(cycles[c].clone());
            covered |= m;
        }
    }
    Ok(list)
}
