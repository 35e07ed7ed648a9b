use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable index {index} out of range for a ring with {size} variables")]
    VariableOutOfRange { index: usize, size: usize },
    #[error("the result is the unit ideal")]
    UnitIdeal,
    #[error("the result is the zero ideal")]
    ZeroIdeal,
    #[error("generator {0} is not square-free")]
    NotSquareFree(String),
    #[error("a monomial prime needs at least one variable")]
    EmptyPrime,
    #[error("the first ideal is not contained in the second")]
    NotContained,
    #[error("prime does not contain the ideal")]
    PrimeDoesNotContain,
    #[error("variable {variable} needs {needed} polarization slots but the ring has {available}")]
    InsufficientSlots {
        variable: String,
        needed: u32,
        available: u32,
    },
    #[error("not a polar ring variable: `{0}`")]
    NotPolar(String),
    #[error("prime contains two slots of base variable `{0}`")]
    RepeatedBase(String),
    #[error("not a facet of the complex")]
    NotAFacet,
    #[error("exhaustive forest check is limited to {limit} facets, got {actual}")]
    TooManyFacets { limit: usize, actual: usize },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
