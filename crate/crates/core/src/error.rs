use num_bigint::{BigInt, BigUint};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the valuation of 0 is infinite")]
    ZeroValuation,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("expected a positive integer, got {0}")]
    NonPositive(BigInt),

    #[error("the exponent j must be at least 1")]
    ZeroExponent,

    #[error("gcd(a, b) = {0}; use the general-gcd routines for non-coprime pairs")]
    NotCoprime(BigInt),

    #[error("a = {a}, b = {b}: the pair is degenerate (a = ±b)")]
    Degenerate { a: BigInt, b: BigInt },

    #[error("a = b gives a^n - b^n = 0, so every n is a member; refusing to enumerate")]
    EveryIntegerIsMember,

    #[error("{0} does not fit the supported range for this operation")]
    OutOfRange(BigUint),

    #[error("factorization effort exceeded; unfactored cofactor {0}")]
    EffortExceeded(BigUint),

    #[error("{0} is not a member of the set")]
    NotMember(u64),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("{0}")]
    InvalidArgument(String),
}
