//! Choice of the branching vertex.
//!
//! Called on a graph already reduced to minimum degree three. Priorities:
//!
//! 1. any vertex of degree at least 5 (highest degree, then smallest id);
//! 2. a degree-4 vertex, preferring one that has satellites, otherwise the
//!    one with the largest guaranteed decrease in the exclude branch;
//! 3. in a 3-regular graph, the largest exclude-branch decrease, then
//!    membership in a shortest cycle, then smallest id.
//!
//! The per-subgraph case table that motivates this ordering is not encoded
//! rule by rule; the greedy score stands in for it, and satellite coupling
//! keeps the two mirror-vertex cases exact.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::reductions::satellites;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RuleTag {
    HighDegree,
    Degree4,
    Degree3Regular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchPlan {
    pub vertex: VertexId,
    pub satellites: Vec<VertexId>,
    pub rule_tag: RuleTag,
    pub note: String,
    /// Guaranteed real-cycle-number decrease (include branch, exclude
    /// branch) when the respective child stays connected. Satellites are
    /// already accounted for.
    pub est_vector: (usize, usize),
}

/// Lower bounds on the circuit-rank decrease of the two children of `v`.
///
/// Include: deleting v removes deg(v) edges and one vertex. Exclude:
/// deleting N[v] removes Σ deg(w) minus the edges inside N(v), and
/// |N(v)| + 1 vertices; the returned value never exceeds
/// Σ deg(w) − 2·deg(v) + 1.
pub fn estimate_vector(g: &Graph, v: VertexId) -> Result<(usize, usize)> {
    let nbrs = g.try_neighbors(v)?;
    let d = nbrs.len();
    if d < 3 {
        return Err(Error::Contract(format!(
            "branch vertex {v} has degree {d} < 3"
        )));
    }
    let sum: usize = nbrs.iter().map(|&w| g.degree(w)).sum();
    let mut inner = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                inner += 1;
            }
        }
    }
    let base = (sum + 1).saturating_sub(2 * d);
    let penalty = (inner + 2).saturating_sub(d);
    Ok((d - 1, base.saturating_sub(penalty)))
}

/// True if `v` lies on a cycle of length `girth`.
fn on_shortest_cycle(g: &Graph, v: VertexId, girth: usize) -> bool {
    shortest_cycle_through(g, v) == Some(girth)
}

/// Length of the shortest cycle through `v`, by BFS from v labelling each
/// vertex with the neighbor of v it was reached through.
fn shortest_cycle_through(g: &Graph, v: VertexId) -> Option<usize> {
    use std::collections::HashMap;
    let mut info: HashMap<VertexId, (usize, VertexId)> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbors(v) {
        info.insert(w, (1, w));
        queue.push_back(w);
    }
    let mut best: Option<usize> = None;
    while let Some(x) = queue.pop_front() {
        let (dx, bx) = info[&x];
        if best.is_some_and(|b| 2 * dx >= b) {
            break;
        }
        for &y in g.neighbors(x) {
            if y == v {
                continue;
            }
            match info.get(&y) {
                None => {
                    info.insert(y, (dx + 1, bx));
                    queue.push_back(y);
                }
                Some(&(dy, by)) if by != bx => {
                    let len = dx + dy + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
                _ => {}
            }
        }
    }
    best
}

fn girth(g: &Graph) -> Option<usize> {
    g.vertices()
        .filter_map(|v| shortest_cycle_through(g, v))
        .min()
}

pub fn select(g: &Graph) -> Result<BranchPlan> {
    if g.is_empty() {
        return Err(Error::Contract("select needs a nonempty graph".into()));
    }
    if g.min_degree() < 3 {
        return Err(Error::Contract("select needs minimum degree 3".into()));
    }
    let max_deg = g.max_degree();

    if max_deg >= 5 {
        let v = g.vertices().find(|&v| g.degree(v) == max_deg).unwrap();
        return plan(
            g,
            v,
            RuleTag::HighDegree,
            format!("degree {max_deg} vertex"),
        );
    }

    if max_deg == 4 {
        let mut best: Option<(bool, usize, VertexId)> = None;
        for v in g.vertices().filter(|&v| g.degree(v) == 4) {
            let has_sat = !satellites(g, v)?.is_empty();
            let (_, exclude) = estimate_vector(g, v)?;
            // larger is better; on ties the earlier (smaller) id stays
            if best.is_none_or(|(bs, be, _)| (has_sat, exclude) > (bs, be)) {
                best = Some((has_sat, exclude, v));
            }
        }
        let (has_sat, _, v) = best.unwrap();
        let note = if has_sat {
            "degree 4 with mirror satellites".to_string()
        } else {
            "degree 4, largest exclude-branch decrease".to_string()
        };
        return plan(g, v, RuleTag::Degree4, note);
    }

    let girth = girth(g);
    let mut best: Option<(usize, bool, VertexId)> = None;
    for v in g.vertices() {
        let (_, exclude) = estimate_vector(g, v)?;
        let short = girth.is_some_and(|len| on_shortest_cycle(g, v, len));
        if best.is_none_or(|(be, bs, _)| (exclude, short) > (be, bs)) {
            best = Some((exclude, short, v));
        }
    }
    let (_, _, v) = best.unwrap();
    plan(
        g,
        v,
        RuleTag::Degree3Regular,
        format!(
            "3-regular, girth {}",
            girth.map_or("none".into(), |l| l.to_string())
        ),
    )
}

fn plan(g: &Graph, v: VertexId, rule_tag: RuleTag, note: String) -> Result<BranchPlan> {
    let satellites = satellites(g, v)?;
    let (include, exclude) = estimate_vector(g, v)?;
    Ok(BranchPlan {
        vertex: v,
        // satellites leave the exclude child as isolated vertices
        est_vector: (include, exclude.saturating_sub(satellites.len())),
        satellites,
        rule_tag,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, petersen};

    fn g(edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn estimates() {
        let p = petersen();
        assert_eq!(estimate_vector(&p, VertexId(0)).unwrap(), (2, 4));

        // degree-4 center 0 with neighbors 1..=4, each of degree 3 via a 4-cycle
        // on 5..=8 so that N(0) is independent.
        let gr = g(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 5),
            (1, 6),
            (2, 6),
            (2, 7),
            (3, 7),
            (3, 8),
            (4, 8),
            (4, 5),
        ]);
        assert_eq!(estimate_vector(&gr, VertexId(0)).unwrap(), (3, 5));

        // degree-5 vertex whose neighbors have degree 3
        let gr = g(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 6),
            (1, 7),
            (2, 7),
            (2, 8),
            (3, 8),
            (3, 9),
            (4, 9),
            (4, 10),
            (5, 10),
            (5, 6),
        ]);
        assert_eq!(estimate_vector(&gr, VertexId(0)).unwrap(), (4, 6));

        assert!(estimate_vector(&g(&[(0, 1), (1, 2)]), VertexId(1)).is_err());
    }

    #[test]
    fn high_degree_first() {
        // K4 on 1..=4 plus vertex 0 of degree 5 and a filler to keep degrees >= 3
        let gr = g(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 1),
            (5, 3),
        ]);
        let p = select(&gr).unwrap();
        assert_eq!(p.vertex, VertexId(0));
        assert_eq!(p.rule_tag, RuleTag::HighDegree);
    }

    #[test]
    fn degree4_prefers_satellites() {
        // u=9 adjacent to a,b,c,d = 1,2,3,4; z=5 adjacent to 1,2,3. Extra
        // structure lifts the rest to degree >= 3.
        let gr = g(&[
            (9, 1),
            (9, 2),
            (9, 3),
            (9, 4),
            (5, 1),
            (5, 2),
            (5, 3),
            (1, 6),
            (2, 6),
            (3, 7),
            (4, 7),
            (4, 8),
            (6, 8),
            (7, 8),
        ]);
        assert!(gr.min_degree() >= 3);
        let p = select(&gr).unwrap();
        assert_eq!(p.vertex, VertexId(9));
        assert_eq!(p.satellites, vec![VertexId(5)]);
        assert_eq!(p.rule_tag, RuleTag::Degree4);
    }

    #[test]
    fn petersen_plan() {
        let p = select(&petersen()).unwrap();
        assert_eq!(p.vertex, VertexId(0));
        assert_eq!(p.rule_tag, RuleTag::Degree3Regular);
        assert_eq!(p.est_vector, (2, 4));
        assert!(p.satellites.is_empty());
    }

    #[test]
    fn rejects_low_degree() {
        assert!(select(&g(&[(0, 1), (1, 2), (2, 0)])).is_err());
        assert!(select(&Graph::new()).is_err());
        assert_eq!(select(&complete(4)).unwrap().vertex, VertexId(0));
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&complete(4)), Some(3));
        assert_eq!(shortest_cycle_through(&petersen(), VertexId(3)), Some(5));
    }
}
