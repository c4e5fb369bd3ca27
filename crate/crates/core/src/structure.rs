//! Cycle structure of a graph: extra-degree, lines and the real-cycle number.
//!
//! The real-cycle number of a connected graph with minimum degree two is
//! `ex(G)/2 + 1`; pendant paths ("lines") carry no cycles and can be peeled
//! off first without changing it. [`tau`] computes the number through that
//! route and checks it against the circuit rank `m - n + c`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A pendant path: starts at a degree-1 vertex, runs through degree-2
/// vertices and stops at the first vertex whose degree is not 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineSegment {
    /// Vertices from the degree-1 start up to, but excluding, the terminal.
    pub path: Vec<VertexId>,
    pub terminal: VertexId,
}

impl LineSegment {
    /// The whole component is this path (terminal has degree 1 too).
    pub fn is_whole_component(&self, g: &Graph) -> bool {
        g.degree(self.terminal) <= 1
    }
}

pub fn extra_degree(g: &Graph, v: VertexId) -> Result<usize> {
    Ok(g.try_neighbors(v)?.len().saturating_sub(2))
}

pub fn extra_degree_graph(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v).saturating_sub(2)).sum()
}

pub fn circuit_rank(g: &Graph) -> usize {
    g.num_edges() + g.num_components() - g.num_vertices()
}

/// Follows the line that starts at degree-1 vertex `start`.
pub fn line_from(g: &Graph, start: VertexId) -> Result<LineSegment> {
    if g.try_neighbors(start)?.len() != 1 {
        return Err(Error::Contract(format!(
            "line must start at a degree-1 vertex, {start} has degree {}",
            g.degree(start)
        )));
    }
    let mut path = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while g.degree(cur) == 2 {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        path.push(cur);
        prev = cur;
        cur = next;
    }
    Ok(LineSegment {
        path,
        terminal: cur,
    })
}

/// All lines of the current graph, one per degree-1 start vertex. A path
/// component shows up twice, once from each end.
pub fn lines(g: &Graph) -> Vec<LineSegment> {
    g.vertices()
        .filter(|&v| g.degree(v) == 1)
        .map(|v| line_from(g, v).unwrap())
        .collect()
}

/// Deletes lines until no vertex of degree at most one is left. A terminal
/// of degree three or more survives; a path component disappears entirely,
/// as do isolated vertices.
pub fn strip_lines(g: &Graph) -> Graph {
    let mut g = g.clone();
    loop {
        let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
        g.remove_vertices(&isolated).unwrap();
        let Some(start) = g.vertices().find(|&v| g.degree(v) == 1) else {
            break;
        };
        let line = line_from(&g, start).unwrap();
        let whole = line.is_whole_component(&g);
        g.remove_vertices(&line.path).unwrap();
        if whole {
            g.remove_vertex(line.terminal).unwrap();
        }
    }
    g
}

/// Real-cycle number of `g`, summed over connected components.
///
/// Panics if the line-stripping route disagrees with the circuit rank; the
/// two are equal for every graph, so a mismatch is a bug.
pub fn tau(g: &Graph) -> usize {
    let stripped = strip_lines(g);
    let mut total = 0;
    for comp in stripped.connected_components() {
        let sub = stripped.induced_subgraph(&comp);
        let ex = extra_degree_graph(&sub);
        debug_assert!(sub.min_degree() >= 2);
        assert!(
            ex.is_multiple_of(2),
            "extra-degree of a stripped component must be even"
        );
        total += ex / 2 + 1;
    }
    assert_eq!(
        total,
        circuit_rank(g),
        "real-cycle number disagrees with circuit rank"
    );
    total
}

/// `floor(ex(G)/2) + 1` for a connected graph.
pub fn tau_upper_bound(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Contract(
            "upper bound needs a connected graph".into(),
        ));
    }
    Ok(extra_degree_graph(g) / 2 + 1)
}
