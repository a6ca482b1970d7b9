//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by ring, Gröbner, Hilbert, and job-level operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Two values from different rings were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A variable name was not found in the ring.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// Text could not be parsed as a polynomial, rational, or job field.
    #[error("parse error: {0}")]
    Parse(String),

    /// A graded operation received a non-homogeneous input.
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    /// The greedy binomial expansion failed; the input is not the Hilbert
    /// polynomial of any subscheme.
    #[error("not a Hilbert polynomial: {0}")]
    NotHilbertPolynomial(String),

    /// Vector or matrix dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Valid input that this version does not handle (e.g. several parameters).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Any other contract violation (zero divisor element, bad block, ...).
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
