use thiserror::Error;

/// Errors reported by every fallible operation in the crate. Vertex numbers
/// carried by errors are 1-based, as in the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: loop edge at vertex {v}")]
    LoopEdge { line: usize, v: usize },
    #[error("line {line}: color {color} outside [1, {max}]")]
    ColorOutOfRange { line: usize, color: u64, max: u32 },
    #[error("line {line}: vertex {vertex} outside [1, {n}]")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("edge {{{u}, {v}}} is not present in the graph")]
    EdgeNotPresent { u: usize, v: usize },
    #[error("invalid pattern: {0}")]
    InvalidSpec(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error(
        "pattern {0} is not color diverse; a consistent solution may not exist \
         (the alternating 2-colored C4 already defeats it)"
    )]
    SpecNotColorDiverse(String),
    #[error("graph uses color {0}, expected only blue (1) and red (2)")]
    NotBicolored(u32),
    #[error("graph is not in class T: {0}")]
    NotInClassT(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("solution failed verification: {0}")]
    VerificationFailed(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
    #[error("vertex partition is not a tripartition: {0}")]
    NotTripartite(String),
    #[error("graph contains the triangle {} {} {}", .0[0], .0[1], .0[2])]
    TriangleFound([usize; 3]),
    #[error("construction check `{check}` failed: {detail}")]
    ValidationFailed { check: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
