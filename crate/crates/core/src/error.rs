use thiserror::Error;

use crate::vertex::VertexId;

/// Failures constructing or querying a single linear order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("vertex {0} appears twice in the order")]
    Duplicate(VertexId),
    #[error("vertex {0} is not in the order")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is already in the order")]
    AlreadyPresent(VertexId),
    #[error("vertex {vertex} of the universe is missing from the order")]
    Missing { vertex: VertexId },
    #[error("order has {len} elements, need at least {need}")]
    TooShort { len: usize, need: usize },
    #[error("position {pos} out of range for order of length {len}")]
    Position { pos: usize, len: usize },
}

/// First violated condition of a candidate triple of orders.
///
/// Order and apex indices are 0-based here; the `Display` form is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("need at least 3 vertices, got {n}")]
    TooSmall { n: usize },
    #[error("order {} does not cover the same vertices as order 1 (vertex {vertex})", .order + 1)]
    UniverseMismatch { order: usize, vertex: VertexId },
    #[error("not a representation, witness ({below}, {above})")]
    NotRepresentation { below: VertexId, above: VertexId },
    #[error("not standard, witness (a{}, {}): rank {rank}", .apex + 1, .order + 1)]
    NotStandard {
        apex: usize,
        order: usize,
        rank: usize,
    },
}

/// Failures of the suppression and insertion steps on a representation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error("cannot suppress apex {0}")]
    SuppressApex(VertexId),
    #[error("cannot suppress from a representation on 3 vertices")]
    SuppressTooSmall,
    #[error("insertion must go directly below a1 = {a1}, got {got}")]
    WrongAnchor { a1: VertexId, got: VertexId },
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("inserted triple is invalid: {0}")]
    Invalid(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("{0}{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("loop at {0}")]
    Loop(VertexId),
}

/// Reasons a graph with rotation fails to be a planar triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("need at least 3 vertices, got {n}")]
    TooSmall { n: usize },
    #[error("graph is not connected (vertex {unreached} unreached)")]
    NotConnected { unreached: VertexId },
    #[error("rotation at {vertex} does not match its adjacency")]
    RotationMismatch { vertex: VertexId },
    #[error("edge count {found} != 3n-6 = {expected}")]
    EdgeCount { expected: usize, found: usize },
    #[error("face walk of length {} is not a triangle: {walk:?}", .walk.len())]
    FaceNotTriangle { walk: Vec<VertexId> },
    #[error("Euler characteristic V-E+F = {chi}, expected 2")]
    Euler { chi: i64 },
    #[error("outer triple {0:?} is not a triangle of the graph")]
    OuterNotTriangle([VertexId; 3]),
    #[error("outer triple {0:?} is not traced as a face")]
    OuterNotFace([VertexId; 3]),
    #[error("neighbourhood of {vertex} has {count} Hamiltonian cycles, expected exactly 1")]
    NeighborhoodCycles { vertex: VertexId, count: usize },
    #[error("rotations at {u} and {v} cannot be oriented consistently")]
    OrientationConflict { u: VertexId, v: VertexId },
    #[error("no neighbour of a1 shares exactly two neighbours with it; input not a triangulation")]
    NoContractible,
    #[error("contracting a1{vertex} would create a parallel edge to {via}")]
    ParallelEdge { vertex: VertexId, via: VertexId },
    #[error("operation needs at least {need} vertices, got {n}")]
    NeedVertices { need: usize, n: usize },
    #[error("{0} is an outer vertex")]
    OuterVertex(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Line-numbered parse failure of one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Representation(#[from] RepresentationError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph is not the sigma2 graph of the representation")]
    NotSigma2,
    #[error("base case needs 3 or 4 vertices, got {n}")]
    BaseSize { n: usize },
    #[error("size {n} exceeds the search cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
