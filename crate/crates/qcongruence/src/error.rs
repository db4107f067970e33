use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("divisor polynomial is zero")]
    ZeroDivisor,

    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,

    #[error("cyclotomic order of the zero function is undefined")]
    OrderOfZero,

    #[error("floor-exponent formula does not cover this product shape")]
    UnsupportedPochShape,

    #[error("cyclotomic index must be odd and greater than 1, got {0}")]
    BadCyclotomicIndex(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unknown suite id `{0}`")]
    UnknownSuite(String),

    #[error("n = {n} is not admissible for suite `{suite}` (requires {requires})")]
    InadmissibleN {
        suite: String,
        n: u64,
        requires: String,
    },

    #[error("parameter violates a stated precondition: {0}")]
    Precondition(String),

    #[error("exponent {num}/{den} is not an integer")]
    FractionalExponent { num: i64, den: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
