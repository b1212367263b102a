use thiserror::Error;

use crate::graph::VertexSet;

/// Errors raised while reading a graph from text.
///
/// Line numbers are 1-based. Vertex labels are reported 1-based as they
/// appear in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={d}")]
    VertexOutOfRange { line: usize, vertex: usize, d: usize },
    #[error("line {line}: {d} vertices exceeds the supported maximum of 64")]
    TooManyVertices { line: usize, d: usize },
    #[error("line {line}: invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidGraph6Byte { line: usize, offset: usize, byte: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range 1..={d}")]
    VertexOutOfRange { vertex: usize, d: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("vertex set {0} does not induce a connected subgraph")]
    DisconnectedSubset(VertexSet),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is bipartite")]
    Bipartite,
    #[error("{0} is not a facet of this graph's edge polytope")]
    InvalidDescriptor(String),
    #[error("family {family}: {reason}")]
    InvalidFamily { family: String, reason: String },
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("vector length {found} does not match ambient dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    /// A proven identity failed to hold. Always a bug, never a property of the input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
