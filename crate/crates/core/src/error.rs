use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid value: {0}")]
    Invalid(String),

    #[error("{what} has size {size}, above the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,

    #[error("matrices do not define a representation: {0}")]
    NotARepresentation(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("element does not induce an outer involution of the stabilizer")]
    OuterInvolution,

    #[error("orbital is not symmetric")]
    NotSymmetric,

    #[error("irreducible characters of the stabilizer are unavailable: {0}")]
    CharactersUnavailable(String),

    #[error("operands live in different ambient algebras or groups")]
    AmbientMismatch,

    #[error("value is not constant on a conjugacy class: {0}")]
    NotClassConstant(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
