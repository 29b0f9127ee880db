use alloc::string::String;

use thiserror::Error;

use crate::graph::{Vertex, VertexSet};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown edge {0}-{1}")]
    UnknownEdge(Vertex, Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not {k}-connected")]
    NotKConnected { k: usize },
    #[error("cutsets of size {0} are not supported here (only 1 and 2)")]
    UnsupportedK(usize),
    #[error("{0} is not a cutset")]
    NotACutset(VertexSet),
    #[error("cutset family mixes sizes {0} and {1}")]
    MixedSizes(usize, usize),
    #[error("cutsets {0} and {1} are dependent")]
    Dependent(VertexSet, VertexSet),
    #[error("{0} is not a node of the tree")]
    UnknownNode(VertexSet),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} has {size} vertices, above the cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Errors that come from a size or budget cap rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SizeCap { .. })
    }
}
