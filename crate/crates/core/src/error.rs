use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: String,
        allowed: String,
    },

    #[error("coefficient vector has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },

    #[error("{what} needs {requested} but the cap is {cap}")]
    SizeCap {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("random sampling needs a prime field, not the rationals")]
    SamplingOverRationals,

    #[error("failed to draw a full-rank matrix after {0} attempts")]
    RetryExhausted(usize),

    #[error("coordinate change matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("Hilbert series did not stabilize up to degree {0}")]
    NotStabilized(usize),

    #[error(
        "enumeration infeasible: {monomials} monomials in degree {d} (limit {limit}); \
         use the randomized stable-space sampler for an upper bound on L"
    )]
    EnumerationInfeasible { d: u32, monomials: u128, limit: u128 },
}

impl Error {
    /// True for errors that signal a resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::SizeCap { .. } | Error::EnumerationInfeasible { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
