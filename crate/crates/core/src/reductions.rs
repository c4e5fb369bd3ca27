//! Cover-preserving graph reductions and the journal that undoes them.
//!
//! Every rule edits the graph in place and appends to a [`ReductionTrace`].
//! Replaying the trace backwards turns any cover of the reduced graph into a
//! cover of the original whose size is the reduced size plus
//! [`ReductionTrace::k_delta`]; an optimal reduced cover lifts to an optimal
//! original cover.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::oracle::is_vertex_cover;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TraceEntry {
    /// `v` was put in the cover and deleted.
    Include(VertexId),
    /// `v` had no neighbors left and was deleted.
    DeleteIsolated(VertexId),
    /// Degree-2 vertex `u` with non-adjacent neighbors `s`, `r` was folded:
    /// `u` and `s` deleted, `s`'s edges moved onto `kept`.
    FoldDeg2 {
        u: VertexId,
        s: VertexId,
        r: VertexId,
        kept: VertexId,
    },
    /// `satellite` was deleted; it is in the cover exactly when `center` is.
    SatelliteCouple {
        center: VertexId,
        satellite: VertexId,
    },
    /// `center` and `neighbors` were replaced by the `created` vertices, one
    /// per non-adjacent pair `(neighbors[i], neighbors[j])`, i < j.
    Struction {
        center: VertexId,
        neighbors: Vec<VertexId>,
        created: Vec<(VertexId, usize, usize)>,
        delta: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub entries: Vec<TraceEntry>,
    pub k_delta: usize,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn include(&mut self, g: &mut Graph, v: VertexId) -> Result<()> {
        g.remove_vertex(v)?;
        self.entries.push(TraceEntry::Include(v));
        self.k_delta += 1;
        Ok(())
    }

    pub fn delete_isolated(&mut self, g: &mut Graph, v: VertexId) -> Result<()> {
        if !g.try_neighbors(v)?.is_empty() {
            return Err(Error::Contract(format!("vertex {v} is not isolated")));
        }
        g.remove_vertex(v)?;
        self.entries.push(TraceEntry::DeleteIsolated(v));
        Ok(())
    }

    /// Deletes `satellite`, recording that it mirrors `center`. The caller is
    /// responsible for the coupling being sound.
    pub fn couple_satellite(
        &mut self,
        g: &mut Graph,
        center: VertexId,
        satellite: VertexId,
    ) -> Result<()> {
        g.remove_vertex(satellite)?;
        self.entries
            .push(TraceEntry::SatelliteCouple { center, satellite });
        Ok(())
    }

    /// Appends another trace that was recorded on the graph this trace
    /// produced.
    pub fn extend(&mut self, later: ReductionTrace) {
        self.entries.extend(later.entries);
        self.k_delta += later.k_delta;
    }

    /// Maps a cover of the reduced graph back to a cover of the graph the
    /// trace started from, without checking the input.
    pub fn lift_unchecked(&self, reduced_cover: &VertexSet) -> VertexSet {
        let mut cover = reduced_cover.clone();
        for entry in self.entries.iter().rev() {
            match entry {
                TraceEntry::Include(v) => {
                    cover.insert(*v);
                }
                TraceEntry::DeleteIsolated(_) => {}
                TraceEntry::FoldDeg2 { u, s, r, kept } => {
                    if cover.remove(kept) {
                        cover.insert(*s);
                        cover.insert(*r);
                    } else {
                        cover.insert(*u);
                    }
                }
                TraceEntry::SatelliteCouple { center, satellite } => {
                    if cover.contains(center) {
                        cover.insert(*satellite);
                    }
                }
                TraceEntry::Struction {
                    center,
                    neighbors,
                    created,
                    ..
                } => {
                    // Created vertices outside the cover form an independent
                    // set that all share one first index i; the original
                    // independent set swaps them for n_i and every partner n_j.
                    let mut independent: BTreeSet<VertexId> = BTreeSet::new();
                    for &(x, i, j) in created {
                        if !cover.remove(&x) {
                            independent.insert(neighbors[i]);
                            independent.insert(neighbors[j]);
                        }
                    }
                    if independent.is_empty() {
                        independent.insert(*center);
                    }
                    for &w in neighbors.iter().chain(std::iter::once(center)) {
                        if !independent.contains(&w) {
                            cover.insert(w);
                        }
                    }
                }
            }
        }
        cover
    }

    /// Checks that `reduced_cover` covers `reduced`, then lifts it.
    pub fn lift_cover(&self, reduced: &Graph, reduced_cover: &VertexSet) -> Result<VertexSet> {
        if !is_vertex_cover(reduced, reduced_cover) {
            return Err(Error::Contract(
                "reduced cover does not cover the reduced graph".into(),
            ));
        }
        Ok(self.lift_unchecked(reduced_cover))
    }
}

/// Folds degree-2 vertex `u`. With adjacent neighbors both go into the
/// cover; otherwise `u`, `s`, `r` collapse into `r` and the budget drops by
/// one.
pub fn fold_degree2(g: &mut Graph, u: VertexId, trace: &mut ReductionTrace) -> Result<()> {
    let nbrs = g.try_neighbors(u)?;
    if nbrs.len() != 2 {
        return Err(Error::Contract(format!(
            "fold needs a degree-2 vertex, {u} has degree {}",
            nbrs.len()
        )));
    }
    let (s, r) = (nbrs[0], nbrs[1]);
    if g.has_edge(s, r) {
        trace.include(g, s)?;
        trace.include(g, r)?;
        trace.delete_isolated(g, u)?;
    } else {
        g.remove_vertex(u)?;
        g.contract_pair(r, s)?;
        trace
            .entries
            .push(TraceEntry::FoldDeg2 { u, s, r, kept: r });
        trace.k_delta += 1;
    }
    Ok(())
}

/// Applies isolated-vertex deletion, the degree-1 rule and degree-2 folding
/// until every vertex has degree at least 3. The lowest degree is handled
/// first, smallest id breaking ties.
pub fn reduce_low_degree(g: &mut Graph, trace: &mut ReductionTrace) -> Result<()> {
    while let Some(v) = lowest_degree_vertex(g, 2) {
        match g.degree(v) {
            0 => trace.delete_isolated(g, v)?,
            1 => {
                let w = g.neighbors(v)[0];
                trace.include(g, w)?;
                trace.delete_isolated(g, v)?;
            }
            _ => fold_degree2(g, v, trace)?,
        }
    }
    Ok(())
}

fn lowest_degree_vertex(g: &Graph, at_most: usize) -> Option<VertexId> {
    let mut best: Option<(usize, VertexId)> = None;
    for v in g.vertices() {
        let d = g.degree(v);
        if d <= at_most && best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, v));
            if d == 0 {
                break;
            }
        }
    }
    best.map(|(_, v)| v)
}

fn is_subset(small: &[VertexId], large: &[VertexId]) -> bool {
    small.iter().all(|x| large.binary_search(x).is_ok())
}

/// First adjacent pair (u, v) with N[v] ⊆ N[u], scanning v then u in id
/// order. Some minimum cover contains u.
pub fn find_dominating(g: &Graph) -> Option<VertexId> {
    for v in g.vertices() {
        let nv = g.neighbors(v);
        for &u in nv {
            let nu = g.neighbors(u);
            if nv.len() > nu.len() {
                continue;
            }
            // N[v] ⊆ N[u] given u ~ v: every other neighbor of v is a neighbor of u.
            if nv.iter().all(|&w| w == u || nu.binary_search(&w).is_ok()) {
                return Some(u);
            }
        }
    }
    None
}

/// Puts one dominating vertex into the cover. Returns whether a rule fired.
pub fn dominated_vertex(g: &mut Graph, trace: &mut ReductionTrace) -> Result<bool> {
    match find_dominating(g) {
        Some(u) => {
            trace.include(g, u)?;
            Ok(true)
        }
        None => Ok(false),
    }
}

/// Vertices z that mirror `u`: z is not adjacent to u, N(z) ⊆ N(u), and u
/// has at most one neighbor outside N(z). For such z some minimum cover
/// contains z exactly when it contains u, so z can ride along with u in a
/// branch. Isolated vertices are not reported.
pub fn satellites(g: &Graph, u: VertexId) -> Result<Vec<VertexId>> {
    let nu = g.try_neighbors(u)?;
    let mut candidates: BTreeSet<VertexId> = BTreeSet::new();
    for &w in nu {
        candidates.extend(g.neighbors(w).iter().copied());
    }
    candidates.remove(&u);
    Ok(candidates
        .into_iter()
        .filter(|&z| {
            let nz = g.neighbors(z);
            nu.binary_search(&z).is_err() && is_subset(nz, nu) && nu.len() - nz.len() <= 1
        })
        .collect())
}

/// Struction on a degree-3 vertex whose neighborhood has at least one edge
/// and at least one non-adjacent pair. N[u] is replaced by one vertex per
/// non-adjacent pair of neighbors; the budget drops by |N(u)| minus the
/// number of pairs. Returns whether it applied.
pub fn struction(g: &mut Graph, u: VertexId, trace: &mut ReductionTrace) -> Result<bool> {
    let nbrs: Vec<VertexId> = g.try_neighbors(u)?.to_vec();
    if nbrs.len() != 3 {
        return Ok(false);
    }
    let p = nbrs.len();
    let mut pairs = Vec::new();
    let mut inner_edges = 0;
    for i in 0..p {
        for j in i + 1..p {
            if g.has_edge(nbrs[i], nbrs[j]) {
                inner_edges += 1;
            } else {
                pairs.push((i, j));
            }
        }
    }
    if inner_edges == 0 || pairs.is_empty() {
        return Ok(false);
    }

    let closed: BTreeSet<VertexId> = nbrs.iter().copied().chain([u]).collect();
    let external: Vec<Vec<VertexId>> = nbrs
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .iter()
                .copied()
                .filter(|w| !closed.contains(w))
                .collect()
        })
        .collect();

    let mut created = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        created.push((g.add_vertex(), i, j));
    }
    for (a, &(xa, ia, ja)) in created.iter().enumerate() {
        for &(xb, ib, jb) in &created[a + 1..] {
            let adjacent = if ia != ib {
                true
            } else {
                // same first index: joined when the partners are adjacent
                g.has_edge(nbrs[ja], nbrs[jb])
            };
            if adjacent {
                g.add_edge(xa, xb)?;
            }
        }
        for &w in external[ia].iter().chain(&external[ja]) {
            g.add_edge(xa, w)?;
        }
    }
    for &x in closed.iter() {
        g.remove_vertex(x)?;
    }
    let delta = p - pairs.len();
    trace.entries.push(TraceEntry::Struction {
        center: u,
        neighbors: nbrs,
        created,
        delta,
    });
    trace.k_delta += delta;
    Ok(true)
}

/// Applies struction to the first eligible vertex in id order.
pub fn struction_any(g: &mut Graph, trace: &mut ReductionTrace) -> Result<bool> {
    let candidates: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    for v in candidates {
        if struction(g, v, trace)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleSet {
    pub domination: bool,
    pub struction: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet {
            domination: true,
            struction: false,
        }
    }
}

/// Runs the low-degree rules, then domination and (if enabled) struction,
/// repeating until none applies.
pub fn reduce_to_fixpoint(g: &mut Graph, trace: &mut ReductionTrace, rules: RuleSet) -> Result<()> {
    loop {
        reduce_low_degree(g, trace)?;
        if rules.domination && dominated_vertex(g, trace)? {
            continue;
        }
        if rules.struction && struction_any(g, trace)? {
            continue;
        }
        return Ok(());
    }
}
