use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable tables differ")]
    VariableTableMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("polynomial has non-real coefficients")]
    NonRealCoefficients,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("interior only: requested level {requested} exceeds trusted level {trusted}")]
    InteriorOnly { requested: usize, trusted: i64 },
    #[error("point at infinity: {0}")]
    AtInfinity(String),
    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;
