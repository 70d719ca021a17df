use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),

    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityError { expected: usize, found: usize },

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("polynomials have mixed degrees ({0} and {1})")]
    DegreeMismatch(u32, u32),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("genericity check failed after {attempts} attempt(s): {what}; try a larger prime")]
    GenericityFailure { what: String, attempts: usize },

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for failures that mean "the mathematics said no" rather than bad input.
    pub fn is_mathematical(&self) -> bool {
        matches!(self, Error::GenericityFailure { .. } | Error::VerificationFailure(_))
    }
}
