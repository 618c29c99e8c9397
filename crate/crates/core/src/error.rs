use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("partition {partition} has a part divisible by {ell}")]
    NotClassRegular { partition: String, ell: usize },
    #[error("colour sequence {colors:?} is not admissible for {partition}")]
    InvalidColors {
        partition: String,
        colors: Vec<usize>,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has non-integral entry at ({row}, {col})")]
    NonIntegral { row: usize, col: usize },
    #[error("series constant term is not a unit")]
    NonUnitConstant,
    #[error("degree {degree} exceeds truncation order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },
    #[error("{what} has size {size}, above the limit {limit}")]
    SizeLimit {
        what: String,
        size: usize,
        limit: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
