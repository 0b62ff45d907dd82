use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} budget exceeded: need {needed}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u64,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("no element of order {n} in GF({order})")]
    NoSuchRoot { n: u64, order: u64 },
    #[error("{n} and {q} are not coprime")]
    NotCoprime { n: u64, q: u64 },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("cannot choose {t} elements from a set of {size}")]
    CardinalityError { t: usize, size: usize },
    #[error("defining set is not a union of {q}-cyclotomic cosets mod {n}")]
    NotClosed { n: u64, q: u64 },
    #[error("T is not contained in the defining set")]
    NotSubset,
    #[error("the code has no nonzero codewords")]
    NoNonzeroCodewords,
    #[error("invalid exponent set: {0}")]
    InvalidExponentSet(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::NotPrimePower(_) => "not_prime_power",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::DivisionByZero => "division_by_zero",
            Error::FieldMismatch => "field_mismatch",
            Error::ZeroElement => "zero_element",
            Error::NoSuchRoot { .. } => "no_such_root",
            Error::NotCoprime { .. } => "not_coprime",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::ZeroDivisor => "zero_divisor",
            Error::NotDivisible => "not_divisible",
            Error::NotHomogeneous => "not_homogeneous",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::CardinalityError { .. } => "cardinality_error",
            Error::NotClosed { .. } => "not_closed",
            Error::NotSubset => "not_subset",
            Error::NoNonzeroCodewords => "no_nonzero_codewords",
            Error::InvalidExponentSet(_) => "invalid_exponent_set",
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
