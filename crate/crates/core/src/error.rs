use crate::gh::PeriodClass;
use crate::lfsr::BinaryPolynomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("modulus {modulus} exceeds the supported maximum {max}")]
    ModulusTooLarge { modulus: u64, max: u64 },
    #[error("seed pair ({a}, {b}) is all-zero modulo {modulus}")]
    DegenerateSeed { a: u64, b: u64, modulus: u64 },
    #[error("count must be positive")]
    ZeroCount,
    #[error("invalid range [{lo}, {hi}]")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is not covered by the period classification")]
    UnclassifiedPrime(u64),
    #[error("period {period} of modulus {modulus} violates class {class}")]
    PeriodTheoremViolation {
        modulus: u64,
        period: u64,
        class: PeriodClass,
    },
    #[error("period {period} of modulus {modulus} exceeds 6m")]
    BoundViolation { modulus: u64, period: u64 },
    #[error("modulus {modulus}: N(m) = 6m is {tight}, but m = 2*5^n is {expected}")]
    TightBoundMismatch {
        modulus: u64,
        tight: bool,
        expected: bool,
    },
    #[error("no period found for modulus {modulus} within {limit} steps")]
    PeriodSearchExhausted { modulus: u64, limit: u64 },

    #[error("invalid polynomial `{0}`")]
    InvalidPolynomial(String),
    #[error("polynomial {0} has no constant term")]
    MissingConstantTerm(BinaryPolynomial),
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: u32, max: u32 },
    #[error("polynomial {poly} is reducible; it has the factor {factor}")]
    Reducible {
        poly: BinaryPolynomial,
        factor: BinaryPolynomial,
    },
    #[error("degree {degree} is too large for direct simulation; use poly_order")]
    DirectSimulationTooLarge { degree: u32 },
    #[error("invalid seed `{0}`: expected a binary string")]
    InvalidSeed(String),
    #[error("seed length {found} does not match register length {expected}")]
    SeedLength { expected: usize, found: usize },
    #[error("seed is all-zero")]
    ZeroSeed,
    #[error("fragment [{offset}, {end}) exceeds the sequence period {period}")]
    FragmentExceedsPeriod { offset: u64, end: u64, period: u64 },

    #[error("symbol {0} is not +1 or -1")]
    InvalidSymbol(i64),
    #[error("sequence is empty")]
    EmptySequence,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("series of length {len} is too short, need at least {required}")]
    SeriesTooShort { len: usize, required: usize },

    #[error("B(n) prefix too short: {required} enumerated primes are required")]
    InsufficientPrefix { required: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("nothing to plot")]
    EmptyPlot,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors signalling a mathematical regression rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::PeriodTheoremViolation { .. }
                | Error::BoundViolation { .. }
                | Error::TightBoundMismatch { .. }
                | Error::PeriodSearchExhausted { .. }
        )
    }
}
