use crate::exactnum::ExactInt;

/// Every failure the core library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{s} and {t} are not coprime; the semigroup has infinitely many gaps")]
    NotCoprime { s: u64, t: u64 },

    #[error("generators must be positive, got ({s}, {t})")]
    ZeroGenerator { s: u64, t: u64 },

    #[error("{value} is not a gap of <{s},{t}>")]
    NotAGap { value: u64, s: u64, t: u64 },

    #[error("{divisor} does not divide {dividend}")]
    Divisibility { dividend: ExactInt, divisor: ExactInt },

    #[error("set is not downward closed: {missing} is missing")]
    NotAnIdeal { missing: u64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),

    #[error("partition is not a ({s},{t})-core")]
    NotACore { s: u64, t: u64 },

    #[error("first-column hooks are not an order ideal of P({s},{t})")]
    InternalBijection { s: u64, t: u64 },

    #[error("poset has {expected} order ideals, above the enumeration cap {cap}")]
    CapExceeded { expected: ExactInt, cap: u64 },

    #[error("rank weight is only defined on T_s = P(s,s+1), not P({s},{t})")]
    UnrankedPoset { s: u64, t: u64 },

    #[error("mismatch in {what}: {lhs} != {rhs}")]
    Mismatch { what: &'static str, lhs: ExactInt, rhs: ExactInt },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
