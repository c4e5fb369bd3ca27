use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {0} is not in the graph")]
    DeadVertex(VertexId),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
