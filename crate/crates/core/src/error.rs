use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Fibonacci index {0} is below -1")]
    FibIndexBelowRange(i64),

    #[error("{name} must be at least {min}, got {got}")]
    Domain {
        name: &'static str,
        min: i64,
        got: i64,
    },

    #[error("arithmetic overflow")]
    Overflow,

    #[error("subtraction would go below zero")]
    Underflow,

    #[error("n = {n} exceeds the enumeration ceiling of {ceiling}")]
    CeilingExceeded { n: u64, ceiling: u32 },

    #[error("invalid enumeration ceiling {0} (must be 1..=63)")]
    InvalidCeiling(u64),

    #[error("sets contain positive integers only, got 0")]
    NonPositiveElement,

    #[error("duplicate element {0}")]
    DuplicateElement(u64),

    #[error("cannot parse set: {0}")]
    Parse(String),

    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),

    #[error("family {0} requires --k")]
    MissingGap(&'static str),

    #[error("family {0} does not take a gap parameter")]
    UnexpectedGap(&'static str),

    #[error(transparent)]
    Precondition(#[from] Precondition),
}

/// Input rejected by the bijection because it lies outside the map's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("not weak-Schreier: min {min} < cardinality {len}")]
    NotWeakSchreier { min: u64, len: usize },

    #[error("not Zeckendorf: contains consecutive elements {0} and {1}")]
    NotZeckendorf(u64, u64),

    #[error("element {max} exceeds n = {n}")]
    ExceedsAmbient { max: u64, n: u64 },
}

pub(crate) fn at_least(name: &'static str, min: i64, got: i64) -> Result<()> {
    if got < min {
        Err(Error::Domain { name, min, got })
    } else {
        Ok(())
    }
}
