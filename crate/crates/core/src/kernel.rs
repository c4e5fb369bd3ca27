//! Nemhauser–Trotter kernelization.
//!
//! The LP relaxation of vertex cover has a half-integral optimum that can be
//! read off a minimum vertex cover of the bipartite double cover: every
//! vertex v gets a left copy and a right copy, every edge {u, v} becomes
//! u_left–v_right and v_left–u_right, and v's LP value is half the number of
//! its copies in the cover. Vertices at 1 go into the cover, vertices at 0
//! are dropped, and the vertices at 1/2 form a kernel with at most twice the
//! remaining budget many vertices.

use serde::Serialize;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::Bipartite;
use crate::reductions::ReductionTrace;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NtPartition {
    pub ones: VertexSet,
    pub zeros: VertexSet,
    pub halves: VertexSet,
}

impl NtPartition {
    /// LP optimum times two.
    pub fn doubled_lp_value(&self) -> usize {
        2 * self.ones.len() + self.halves.len()
    }

    /// Smallest integer no smaller than the LP optimum: a lower bound on the
    /// minimum cover.
    pub fn lower_bound(&self) -> usize {
        self.doubled_lp_value().div_ceil(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum KernelVerdict {
    /// Kernel has no edges and the budget is non-negative.
    Yes,
    /// Budget negative or LP bound exceeds it.
    No,
    /// Search still needed on the kernel.
    Open,
}

#[derive(Clone, Debug)]
pub struct Kernel {
    pub graph: Graph,
    pub k_residual: i64,
    pub partition: NtPartition,
    pub trace: ReductionTrace,
    pub verdict: KernelVerdict,
}

/// Half-integral LP optimum via the double cover.
pub fn nt_partition(g: &Graph) -> NtPartition {
    let ids: Vec<VertexId> = g.vertices().collect();
    let pos = |v: VertexId| ids.binary_search(&v).unwrap();
    let n = ids.len();
    let mut b = Bipartite::new(n, n);
    for (i, &v) in ids.iter().enumerate() {
        for &w in g.neighbors(v) {
            b.add_edge(i, pos(w));
        }
    }
    let m = b.maximum_matching();
    let (left, right) = b.konig_cover(&m);
    let mut part = NtPartition::default();
    for (i, &v) in ids.iter().enumerate() {
        match (left[i] as u8) + (right[i] as u8) {
            2 => part.ones.insert(v),
            1 => part.halves.insert(v),
            _ => part.zeros.insert(v),
        };
    }
    part
}

/// LP lower bound on the minimum vertex cover of `g`.
pub fn lp_lower_bound(g: &Graph) -> usize {
    if g.num_edges() == 0 {
        return 0;
    }
    nt_partition(g).lower_bound()
}

pub fn nt_kernelize(g: &Graph, k: usize) -> Kernel {
    let partition = nt_partition(g);
    let mut graph = g.clone();
    let mut trace = ReductionTrace::new();
    for &v in &partition.ones {
        trace.include(&mut graph, v).expect("live vertex");
    }
    for &v in &partition.zeros {
        trace
            .delete_isolated(&mut graph, v)
            .expect("LP-zero vertices only neighbor LP-one vertices");
    }
    let k_residual = k as i64 - partition.ones.len() as i64;
    let verdict = if k_residual < 0 || partition.halves.len() as i64 > 2 * k_residual {
        KernelVerdict::No
    } else if graph.num_edges() == 0 {
        KernelVerdict::Yes
    } else {
        KernelVerdict::Open
    };
    Kernel {
        graph,
        k_residual,
        partition,
        trace,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, star};

    #[test]
    fn star_kernel() {
        let k = nt_kernelize(&star(4), 1);
        assert_eq!(k.partition.ones, [VertexId(0)].into_iter().collect());
        assert!(k.graph.is_empty());
        assert_eq!(k.k_residual, 0);
        assert_eq!(k.verdict, KernelVerdict::Yes);
        assert_eq!(k.partition.doubled_lp_value(), 2);
    }

    #[test]
    fn odd_cycle_is_all_half() {
        let k = nt_kernelize(&cycle(5), 2);
        assert_eq!(k.partition.halves.len(), 5);
        assert_eq!(k.graph.num_edges(), 5);
        assert_eq!(k.partition.doubled_lp_value(), 5);
        assert_eq!(k.verdict, KernelVerdict::No);
        assert_eq!(nt_kernelize(&cycle(5), 3).verdict, KernelVerdict::Open);
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::from_parts((0..4).map(VertexId), []).unwrap();
        for k in 0..3 {
            let kern = nt_kernelize(&g, k);
            assert!(kern.graph.is_empty());
            assert_eq!(kern.verdict, KernelVerdict::Yes);
        }
    }

    #[test]
    fn partition_shape() {
        let g = Graph::from_edges([(0u32, 1u32), (0, 2), (0, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let p = nt_partition(&g);
        let all: VertexSet = p
            .ones
            .iter()
            .chain(&p.zeros)
            .chain(&p.halves)
            .copied()
            .collect();
        assert_eq!(all.len(), g.num_vertices());
        for &z in &p.zeros {
            assert!(g.neighbors(z).iter().all(|w| p.ones.contains(w)));
        }
    }
}
