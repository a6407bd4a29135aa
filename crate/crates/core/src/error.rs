use thiserror::Error;

use crate::monomial::Flavor;

/// Domain errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("flavor mismatch: {0} vs {1}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("coefficient at exponents {exponents:?} is not a constant")]
    NonConstantCoefficient { exponents: Vec<usize> },
    #[error("expected a one-variable input, found variable x{0}")]
    NotOneVariable(u32),
    #[error("operator family invalid: mu_{var},{degree}(1) = 0")]
    InvalidFamily { var: u32, degree: usize },
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),
    #[error("weight mismatch: partition of {0} against cycle type of {1}")]
    WeightMismatch(usize, usize),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("class function is not a character: {0}")]
    NotACharacter(String),
    #[error("basis is not stable under the symmetric group action")]
    NotStable,
    #[error("basis elements are linearly dependent")]
    DependentBasis,
    #[error("negative multiplicity for {0} in the recursion")]
    NegativeMultiplicity(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("root data does not match the characteristic polynomial: {0}")]
    RootMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
