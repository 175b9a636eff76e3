use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("value is not rational: non-constant cyclotomic coefficients remain")]
    NotRational,
    #[error("class function is not a virtual character: {0}")]
    NotVirtual(String),
    #[error("function is not constant on conjugacy classes")]
    NotClassFunction,
    #[error("twisting character must have dimension 0, found {0}")]
    NotReduced(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("representation is not fixed point free: {0:?}")]
    NotFixedPointFree(Vec<i64>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
