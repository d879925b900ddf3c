use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("factorization bail-out exceeded, unfactored cofactor {cofactor}")]
    FactorBailout { cofactor: BigUint },
    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("logarithm of non-positive value")]
    NonPositiveLog,
    #[error("{0} is not an S-unit: prime {1} not in S")]
    NotSUnit(String, u64),
    #[error("parametrization requires extension field")]
    NeedsExtension,
    #[error("relation is not on the subtorus")]
    NotOnSubtorus,
    #[error("relation u^{p} v^{q} = w cannot be written as u = t^q, v = w t^-p")]
    DegenerateParametrization { p: i64, q: i64 },
    #[error("pole: denominator vanishes")]
    Pole,
    #[error("common zero: both values vanish")]
    CommonZero,
    #[error("inputs share a factor")]
    SharedFactor,
    #[error("polynomial has negative exponents")]
    NotPolynomial,
    #[error("zero denominator polynomial")]
    ZeroDenominator,
    #[error("degenerate support")]
    DegenerateSupport,
    #[error("degree of the zero function is undefined")]
    UndefinedDegree,
    #[error("monomial 1 required")]
    MonomialOneRequired,
    #[error("value equals 1: {0}")]
    ValueIsOne(&'static str),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("z undefined: v = 1")]
    ZUndefined,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("config error: {0}")]
    Config(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
