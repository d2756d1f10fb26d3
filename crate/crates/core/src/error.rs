use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalars from different domains: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("division by non-unit {0}")]
    DivisionByNonUnit(String),
    #[error("rank routines need field scalars, got {0}")]
    NonFieldScalars(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the ambient space it is divided out of")]
    NotASubspace,
    #[error("invalid scalar literal {0:?}")]
    BadScalar(String),
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a group: {reason} at ({a}, {b}, {c})")]
    NotAGroup {
        reason: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("element {0} is not a chosen conjugacy class representative")]
    NotARepresentative(usize),
    #[error("invalid specification: {0}")]
    BadSpec(String),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("root of unity check failed: {0}")]
    BadRoot(String),
    #[error("pairing cocycles need a group of shape Z/n x Z/n: {0}")]
    WrongGroupShape(String),
    #[error("character is not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),

    #[error("cochain space of {needed} basis elements exceeds the budget of {budget}")]
    TooLarge { needed: u128, budget: u128 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("map is only defined for the trivial cocycle")]
    NotTrivialCocycle,

    #[error("p = {0}: even primes admit no symmetric section")]
    EvenPrime(u64),
    #[error("cochain is not invariant under sigma_{0}")]
    NotSymmetric(usize),
    #[error("lifted coboundary left the kernel of the reduction at coordinate {0}")]
    SectionUndefined(usize),
}
