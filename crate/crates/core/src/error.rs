use thiserror::Error;

/// Errors raised by the algebra, group and knot routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division is not exact: {0}")]
    NotDivisible(String),
    #[error("zero polynomial has no canonical unit form")]
    ZeroPolynomial,
    #[error("determinant vanishes: {0}")]
    ZeroDeterminant(String),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("singular form: {0}")]
    Singular(String),
    #[error("field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
