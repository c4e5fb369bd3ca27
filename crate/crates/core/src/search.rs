//! Branch-and-reduce search for vertex cover.
//!
//! Each search node: forest shortcut, optional Nemhauser–Trotter kernel,
//! reductions to a fixpoint, optional LP lower bound, a split into connected
//! components (solved independently, each to its minimum), and finally a
//! two-way branch on the vertex chosen by [`select`]: either the vertex and
//! its satellites join the cover, or its whole neighborhood does.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{INTERLEAVED_BASE, REAL_CYCLE_BASE};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::kernel::{lp_lower_bound, nt_kernelize, KernelVerdict};
use crate::oracle::is_vertex_cover;
use crate::reductions::{reduce_to_fixpoint, ReductionTrace, RuleSet};
use crate::selection::select;
use crate::structure::tau;
use crate::tree::min_vc_forest;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub rules: RuleSet,
    /// Prune with the LP lower bound.
    pub lp_bound: bool,
    /// Kernelize at the root.
    pub kernelize: bool,
    /// Re-kernelize every this many branching levels; 0 means root only.
    pub interleave_depth: usize,
    pub node_budget: u64,
    /// Worker threads for independent components; 1 runs sequentially.
    pub threads: usize,
    /// Recompute the real-cycle number around every branch and record the
    /// outcome of the monotonicity and decrease checks in the stats.
    pub instrument: bool,
}

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

impl SearchConfig {
    /// Defaults for the decision procedure: LP pruning off so the search
    /// tree keeps the plain branch-and-reduce shape.
    pub fn decide() -> Self {
        SearchConfig {
            lp_bound: false,
            ..Self::minimize()
        }
    }

    pub fn minimize() -> Self {
        SearchConfig {
            rules: RuleSet::default(),
            lp_bound: true,
            kernelize: true,
            interleave_depth: 8,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            instrument: false,
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self::minimize()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    /// Nodes that actually branched on a vertex.
    pub branch_nodes: u64,
    pub max_depth: usize,
    /// Subproblems answered by the forest solver.
    pub tree_leaf_count: u64,
    /// Subproblems cut because the budget ran out.
    pub k_exhausted_leaves: u64,
    pub lp_prunes: u64,
    pub kernel_prunes: u64,
    pub tau_root: usize,
    /// No branch ever increased the real-cycle number.
    pub tau_trajectory_ok: bool,
    /// Connected include-children of satellite-free degree-d branches lost
    /// exactly d − 1 real cycles.
    pub tau_drop_ok: bool,
    /// Measured decreases were never below the plan's estimate.
    pub estimate_ok: bool,
    pub branches_checked: u64,
    #[serde(serialize_with = "as_secs")]
    pub wallclock: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl Default for SearchStats {
    fn default() -> Self {
        SearchStats {
            nodes_expanded: 0,
            branch_nodes: 0,
            max_depth: 0,
            tree_leaf_count: 0,
            k_exhausted_leaves: 0,
            lp_prunes: 0,
            kernel_prunes: 0,
            tau_root: 0,
            tau_trajectory_ok: true,
            tau_drop_ok: true,
            estimate_ok: true,
            branches_checked: 0,
            wallclock: Duration::ZERO,
        }
    }
}

impl SearchStats {
    fn merge(&mut self, other: &SearchStats) {
        self.nodes_expanded += other.nodes_expanded;
        self.branch_nodes += other.branch_nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.tree_leaf_count += other.tree_leaf_count;
        self.k_exhausted_leaves += other.k_exhausted_leaves;
        self.lp_prunes += other.lp_prunes;
        self.kernel_prunes += other.kernel_prunes;
        self.tau_trajectory_ok &= other.tau_trajectory_ok;
        self.tau_drop_ok &= other.tau_drop_ok;
        self.estimate_ok &= other.estimate_ok;
        self.branches_checked += other.branches_checked;
    }

    /// Equality of everything except wall-clock time.
    pub fn same_counters(&self, other: &SearchStats) -> bool {
        let strip = |s: &SearchStats| SearchStats {
            wallclock: Duration::ZERO,
            ..s.clone()
        };
        format!("{:?}", strip(self)) == format!("{:?}", strip(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub answer: Answer,
    /// A cover of size at most `k`, present exactly when the answer is yes.
    pub cover: Option<VertexSet>,
    pub k: usize,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, Serialize)]
pub struct Minimum {
    pub size: usize,
    pub cover: VertexSet,
    pub stats: SearchStats,
}

struct Searcher {
    config: SearchConfig,
    nodes: AtomicU64,
}

impl Searcher {
    fn new(config: SearchConfig) -> Self {
        Searcher {
            config,
            nodes: AtomicU64::new(0),
        }
    }

    fn kernel_due(&self, depth: usize) -> bool {
        self.config.kernelize
            && (depth == 0
                || (self.config.interleave_depth > 0
                    && depth.is_multiple_of(self.config.interleave_depth)))
    }

    /// A cover of `g` with at most `ub` vertices, or `None` if none exists.
    /// With `minimize` the returned cover is a minimum one.
    fn solve(
        &self,
        g: Graph,
        ub: i64,
        depth: usize,
        minimize: bool,
        stats: &mut SearchStats,
    ) -> Result<Option<VertexSet>> {
        stats.nodes_expanded += 1;
        stats.max_depth = stats.max_depth.max(depth);
        let total = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > self.config.node_budget {
            return Err(Error::ResourceLimit(format!(
                "node budget of {} exceeded",
                self.config.node_budget
            )));
        }

        if ub < 0 {
            stats.k_exhausted_leaves += 1;
            return Ok(None);
        }
        if g.num_edges() == 0 {
            return Ok(Some(VertexSet::new()));
        }
        if ub == 0 {
            stats.k_exhausted_leaves += 1;
            return Ok(None);
        }
        if g.is_forest() {
            stats.tree_leaf_count += 1;
            let (size, cover) = min_vc_forest(&g)?;
            return Ok((size as i64 <= ub).then_some(cover));
        }

        let mut g = g;
        let mut trace = ReductionTrace::new();
        if self.kernel_due(depth) {
            let kernel = nt_kernelize(&g, ub as usize);
            if kernel.verdict == KernelVerdict::No {
                stats.kernel_prunes += 1;
                return Ok(None);
            }
            g = kernel.graph;
            trace = kernel.trace;
        }
        reduce_to_fixpoint(&mut g, &mut trace, self.config.rules)?;
        let ub = ub - trace.k_delta as i64;
        if ub < 0 {
            stats.k_exhausted_leaves += 1;
            return Ok(None);
        }
        if g.num_edges() == 0 {
            return Ok(Some(trace.lift_unchecked(&VertexSet::new())));
        }
        if ub == 0 {
            stats.k_exhausted_leaves += 1;
            return Ok(None);
        }
        if self.config.lp_bound && lp_lower_bound(&g) as i64 > ub {
            stats.lp_prunes += 1;
            return Ok(None);
        }

        let components = g.connected_components();
        let found = if components.len() > 1 {
            self.solve_components(&g, components, ub, depth, stats)?
        } else {
            self.branch(g, ub, depth, minimize, stats)?
        };
        Ok(found.map(|c| trace.lift_unchecked(&c)))
    }

    fn component_lower_bound(&self, g: &Graph) -> i64 {
        if self.config.lp_bound {
            lp_lower_bound(g) as i64
        } else {
            i64::from(g.num_edges() > 0)
        }
    }

    /// Minimum covers of each component. Budgets depend only on the other
    /// components' lower bounds, so results are schedule independent.
    fn solve_components(
        &self,
        g: &Graph,
        components: Vec<Vec<VertexId>>,
        ub: i64,
        depth: usize,
        stats: &mut SearchStats,
    ) -> Result<Option<VertexSet>> {
        let parts: Vec<Graph> = components.iter().map(|c| g.induced_subgraph(c)).collect();
        let lbs: Vec<i64> = parts
            .iter()
            .map(|p| self.component_lower_bound(p))
            .collect();
        let lb_total: i64 = lbs.iter().sum();
        if lb_total > ub {
            stats.lp_prunes += 1;
            return Ok(None);
        }
        let run = |(part, lb): (Graph, i64)| {
            let mut local = SearchStats::default();
            let budget = ub - (lb_total - lb);
            let r = self.solve(part, budget, depth, true, &mut local);
            (r, local)
        };
        let jobs: Vec<(Graph, i64)> = parts.into_iter().zip(lbs).collect();
        let results: Vec<_> = if self.config.threads > 1 {
            jobs.into_par_iter().map(run).collect()
        } else {
            jobs.into_iter().map(run).collect()
        };
        let mut cover = VertexSet::new();
        let mut feasible = true;
        for (r, local) in results {
            stats.merge(&local);
            match r? {
                Some(c) => cover.extend(c),
                None => feasible = false,
            }
        }
        Ok((feasible && cover.len() as i64 <= ub).then_some(cover))
    }

    fn branch(
        &self,
        g: Graph,
        ub: i64,
        depth: usize,
        minimize: bool,
        stats: &mut SearchStats,
    ) -> Result<Option<VertexSet>> {
        stats.branch_nodes += 1;
        let plan = select(&g)?;
        let v = plan.vertex;
        let nbrs: Vec<VertexId> = g.neighbors(v).to_vec();
        let d = nbrs.len();

        let mut include_removed = plan.satellites.clone();
        include_removed.push(v);
        let include_child = g.without(&include_removed);
        let mut exclude_removed = include_removed;
        exclude_removed.extend(&nbrs);
        let exclude_child = g.without(&exclude_removed);

        if self.config.instrument {
            self.check_branch(&g, &plan, &include_child, &exclude_child, stats);
        }

        let mut best: Option<VertexSet> = None;
        let include_cost = 1 + plan.satellites.len() as i64;
        if let Some(mut c) =
            self.solve(include_child, ub - include_cost, depth + 1, minimize, stats)?
        {
            c.insert(v);
            c.extend(&plan.satellites);
            if !minimize {
                return Ok(Some(c));
            }
            best = Some(c);
        }
        let cap = best.as_ref().map_or(ub, |b| b.len() as i64 - 1);
        if let Some(mut c) =
            self.solve(exclude_child, cap - d as i64, depth + 1, minimize, stats)?
        {
            c.extend(&nbrs);
            best = Some(c);
        }
        Ok(best)
    }

    fn check_branch(
        &self,
        g: &Graph,
        plan: &crate::selection::BranchPlan,
        include_child: &Graph,
        exclude_child: &Graph,
        stats: &mut SearchStats,
    ) {
        stats.branches_checked += 1;
        let parent = tau(g);
        let d = g.degree(plan.vertex);
        let children = [
            (include_child, plan.est_vector.0, true),
            (exclude_child, plan.est_vector.1, false),
        ];
        for (child, estimate, is_include) in children {
            let t = tau(child);
            if t > parent {
                stats.tau_trajectory_ok = false;
                continue;
            }
            if child.is_empty() || !child.is_connected() {
                continue;
            }
            let drop = parent - t;
            if drop < estimate {
                stats.estimate_ok = false;
            }
            if is_include && plan.satellites.is_empty() && drop != d - 1 {
                stats.tau_drop_ok = false;
            }
        }
    }
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if threads <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Decides whether `g` has a vertex cover of at most `k` vertices; a yes
/// answer carries a certificate.
pub fn vc_decide(g: &Graph, k: i64, config: &SearchConfig) -> Result<Verdict> {
    if k < 0 {
        return Err(Error::Contract(format!(
            "budget must be non-negative, got {k}"
        )));
    }
    let start = Instant::now();
    let searcher = Searcher::new(*config);
    let mut stats = SearchStats {
        tau_root: tau(g),
        ..SearchStats::default()
    };
    let found = with_pool(config.threads, || {
        searcher
            .solve(g.clone(), k, 0, false, &mut stats)
            .map(|f| (f, stats))
    })??;
    let (found, mut stats) = found;
    stats.wallclock = start.elapsed();
    if let Some(c) = &found {
        if !is_vertex_cover(g, c) || c.len() as i64 > k {
            return Err(Error::Contract(
                "search produced an invalid certificate".into(),
            ));
        }
    }
    Ok(Verdict {
        answer: if found.is_some() {
            Answer::Yes
        } else {
            Answer::No
        },
        cover: found,
        k: k as usize,
        stats,
    })
}

/// Minimum vertex cover by branch and bound over the same search.
pub fn vc_minimum(g: &Graph, config: &SearchConfig) -> Result<Minimum> {
    let start = Instant::now();
    let searcher = Searcher::new(*config);
    let mut stats = SearchStats {
        tau_root: tau(g),
        ..SearchStats::default()
    };
    let ub = g.num_vertices() as i64;
    let (found, mut stats) = with_pool(config.threads, || {
        searcher
            .solve(g.clone(), ub, 0, true, &mut stats)
            .map(|f| (f, stats))
    })??;
    stats.wallclock = start.elapsed();
    let cover = found.ok_or_else(|| Error::Contract("no cover within |V|".into()))?;
    if !is_vertex_cover(g, &cover) {
        return Err(Error::Contract("search produced an invalid cover".into()));
    }
    Ok(Minimum {
        size: cover.len(),
        cover,
        stats,
    })
}

/// Observed search size next to the exponential reference curves. Purely
/// informational.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnvelopeReport {
    pub k: usize,
    pub nodes_expanded: u64,
    pub envelope_1_15855: f64,
    pub envelope_1_1504: f64,
    /// ln(nodes) / k; absent for k = 0.
    pub log_nodes_per_k: Option<f64>,
}

pub fn check_node_budget(stats: &SearchStats, k: usize) -> EnvelopeReport {
    let kf = k as f64;
    EnvelopeReport {
        k,
        nodes_expanded: stats.nodes_expanded,
        envelope_1_15855: REAL_CYCLE_BASE.powf(kf),
        envelope_1_1504: INTERLEAVED_BASE.powf(kf),
        log_nodes_per_k: (k > 0).then(|| (stats.nodes_expanded.max(1) as f64).ln() / kf),
    }
}
