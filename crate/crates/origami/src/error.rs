use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coordinates must be finite, got ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("line normal is too close to zero")]
    ZeroNormal,
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("points coincide within tolerance")]
    CoincidentPoints,
    #[error("lines coincide within tolerance")]
    CoincidentLines,
    #[error("focus lies on its directrix")]
    DegenerateFocus,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("length must be positive")]
    InvalidLength,
    #[error("lengths must be positive")]
    InvalidLengths,
    #[error("angle out of range (0, pi)")]
    OutOfRange,
    #[error("triangle is degenerate (zero area)")]
    DegenerateTriangle,
    #[error("crease vertex is invalid: {0}")]
    InvalidVertex(String),
    #[error("crease assignment missing")]
    MissingAssignment,
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("unknown node id: {0}")]
    UnknownNode(String),
    #[error("missing position for terminal node: {0}")]
    MissingPosition(String),
    #[error("layout violates the distance condition (worst violation {0:.3e})")]
    InvalidLayout(f64),
    #[error("active paths cross between ({0:.6}, {1:.6}) and ({2:.6}, {3:.6})")]
    CrossingPaths(f64, f64, f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
