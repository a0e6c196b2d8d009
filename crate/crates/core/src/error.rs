//! Error type shared across the crate.
//!
//! Mathematical *verdicts* (a family failing strictness, a certificate that
//! does not close) are ordinary return values, never errors. Errors are
//! reserved for ill-posed inputs, singular recurrence points, and problem
//! classes the toolkit deliberately does not handle.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Input outside an operation's domain (n < 1, zero polynomial, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The recurrence's leading coefficient vanishes at an index the
    /// extension needs.
    #[error("singular point: leading coefficient vanishes at n = {index}")]
    SingularPoint { index: i64 },

    /// The problem falls outside the supported expansion class
    /// (irrational or complex characteristic roots, order > 2, ...).
    #[error("unsupported class: {0}")]
    UnsupportedClass(String),

    /// Repeated dominant characteristic root; the ratio ansatz needs a
    /// unique dominant solution.
    #[error("degenerate class: {0}")]
    DegenerateClass(String),

    /// A criterion's hypotheses are not met (e.g. c <= 0 or alpha < 2).
    #[error("criterion not applicable: {0}")]
    NotApplicable(String),

    /// The computation cannot decide at the requested precision; retrying
    /// with more expansion terms may succeed.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// An enforced resource cap was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Malformed textual input (rational strings, sequence spec files).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
