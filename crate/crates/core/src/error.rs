use thiserror::Error;

use crate::graph::VertexId;
use crate::packing::PartitionCertificate;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph text.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Arguments that violate an operation's preconditions.
    #[error("invalid input: {0}")]
    Input(String),

    /// The input is well formed but the requested object is undefined for it
    /// (e.g. two vertices in different tree-connected components).
    #[error("domain error: {0}")]
    Domain(String),

    /// The graph is not m-tree-connected; carries the deficient partition.
    #[error("graph is not {}-tree-connected (partition with {} parts, deficiency {})",
        .0.m, .0.partition.len(), .0.deficiency)]
    NotTreeConnected(PartitionCertificate),

    /// An edge-connectivity requirement failed; `side` is one shore of a small cut.
    #[error("edge connectivity {found} is below the required {required}")]
    CutTooSmall {
        required: usize,
        found: usize,
        side: Vec<VertexId>,
    },

    #[error("instance too large: {what} = {size} exceeds cap {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A postcondition that the theory guarantees did not hold. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
