use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image array is not a bijection: {0}")]
    NotBijection(String),

    #[error("cannot parse cycle notation: {0}")]
    Parse(String),

    #[error("generator list is empty")]
    NoGenerators,

    #[error("group has more than {cap} elements; refusing to enumerate")]
    CapExceeded { cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("exponent must be positive")]
    ZeroExponent,

    #[error("seed element is not a member of the parent group")]
    NotMember,

    #[error("subgroup is not normal in the parent group")]
    NotNormal,

    #[error("quotient degree {index} exceeds the limit {limit}")]
    QuotientTooLarge { index: u128, limit: u128 },

    #[error("group needs at least two prime divisors, found {0}")]
    TooFewPrimes(usize),

    #[error("group is not a {0}-group")]
    NotPGroup(u64),

    #[error("group is not solvable")]
    NotSolvable,

    #[error("generator images do not define an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("invalid field parameters: {0}")]
    Field(String),

    #[error("invalid group construction: {0}")]
    Construction(String),

    #[error("unknown group: {0}")]
    UnknownGroup(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("catalog: {0}")]
    Catalog(String),
}
