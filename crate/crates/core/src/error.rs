//! Error type shared by the algebraic modules.
//!
//! Identity *violations* are never errors: they are reported through
//! [`CheckReport`] verdicts. Errors are reserved
//! for calls that cannot be evaluated at all (wrong arity, mismatched spaces,
//! a singular operator that must be inverted, a failed construction
//! precondition).

use crate::report::CheckReport;
use thiserror::Error;

/// Errors raised by evaluation and construction functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error(
        "twisting maps are not all equal; identity checks are only defined for the \
         multiplicative case where every twisting map coincides"
    )]
    NonMultiplicative,

    #[error("map is not invertible (singular)")]
    NotInvertible,

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("conflicting values while completing a table: {0}")]
    Conflict(String),

    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {}", failing_check(.0))]
    Precondition(Box<CheckReport>),
}

fn failing_check(report: &CheckReport) -> String {
    let leaf = report.first_failure().unwrap_or(report);
    match &leaf.witness {
        Some(w) => format!("{} at {}", leaf.check, w.describe()),
        None => leaf.check.clone(),
    }
}

impl Error {
    /// Wraps a failing report as a precondition error; passing reports are
    /// returned unchanged as `Ok`.
    pub fn require(report: CheckReport) -> Result<CheckReport, Error> {
        if report.passed() {
            Ok(report)
        } else {
            Err(Error::Precondition(Box::new(report)))
        }
    }
}
