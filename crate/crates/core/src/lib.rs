//! Exact vertex cover for sparse graphs.
//!
//! The solver is a branch-and-reduce search whose progress is measured by
//! the circuit rank (the number of independent cycles). Around it sit the
//! pieces it is built from and checked against: structural quantities,
//! reduction rules with cover lifting, a Nemhauser–Trotter kernel, an exact
//! forest solver, brute-force oracles, random generators, and the
//! branching-vector arithmetic behind the running-time bound.

pub mod analysis;
pub mod error;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod matching;
pub mod oracle;
pub mod reductions;
pub mod search;
pub mod selection;
pub mod structure;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId, VertexSet};
pub use kernel::{nt_kernelize, nt_partition, Kernel, KernelVerdict, NtPartition};
pub use reductions::{ReductionTrace, RuleSet};
pub use search::{vc_decide, vc_minimum, Answer, SearchConfig, SearchStats, Verdict};
pub use structure::{circuit_rank, tau};
pub use tree::min_vc_forest;
