use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("0 cannot be a generator")]
    ZeroGenerator,
    #[error("generators have gcd {0}; the complement would be infinite")]
    GcdNotOne(u64),
    #[error("membership window limit {limit} exceeded")]
    WindowOverflow { limit: usize },
    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(u64),
    #[error("{0} is not an effective generator")]
    NotEffective(u64),
    #[error("invalid gap set: {0}")]
    InvalidGaps(String),
    #[error("the semigroup has multiplicity 1 and no Kunz coordinates")]
    MultiplicityOne,
    #[error("expected a vector of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a valid Kunz vector for multiplicity {m}: {reason}")]
    InvalidKunz { m: u32, reason: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("Fibonacci index {0} is negative")]
    NegativeIndex(i64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("census covers genus <= {available}, genus {requested} was requested")]
    IncompleteTable { requested: u32, available: u32 },
    #[error("the semigroup is already ordinary")]
    AlreadyOrdinary,
    #[error("invalid semigroup record: {0}")]
    InvalidRecord(String),
}
