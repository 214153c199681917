use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot enumerate an infinite group")]
    InfiniteEnumeration,
    #[error("group of order {order} exceeds the enumeration cap of {cap} elements")]
    SizeCap { order: String, cap: u64 },
    #[error("homomorphism is not well defined: {0}")]
    IllDefined(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
