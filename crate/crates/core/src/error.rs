//! Error type shared by every evaluation and solver path.

use thiserror::Error;

/// Library-wide error type.
///
/// Evaluation routines fail loudly instead of returning silently inaccurate
/// values; in particular [`Error::CancellationBudgetExceeded`] signals that a
/// series sum lost too many digits to alternating-sign cancellation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Construction of a domain type failed (invariant violated).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The stopping rule was not met within the term budget.
    #[error("series did not converge within {max_terms} terms (last |term| = {last_term:e})")]
    NotConverged { max_terms: usize, last_term: f64 },

    /// The ratio max |term| / |sum| exceeded the configured precision budget.
    #[error("cancellation budget exceeded: max|term|/|sum| = {ratio:.3e} > {budget:.1e}")]
    CancellationBudgetExceeded { ratio: f64, budget: f64 },

    /// A denominator Pochhammer value vanished inside a terminating sum.
    #[error("denominator Pochhammer value vanishes at k = {k}")]
    UndefinedDenominator { k: usize },

    /// Forward scanning ran out of range before locating the requested zero.
    #[error("zero scan exhausted: found {found} of {wanted} sign changes below x = {limit}")]
    ScanExhausted {
        found: usize,
        wanted: usize,
        limit: f64,
    },

    /// No sign change could be bracketed for a root solve.
    #[error(
        "bracketing failed on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e} \
         have the same sign"
    )]
    BracketFailed {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// Adaptive quadrature exceeded its refinement budget.
    #[error("adaptive quadrature exceeded its depth budget on [{lo}, {hi}]")]
    QuadratureFailed { lo: f64, hi: f64 },

    /// A certification was requested at a point where its hypotheses fail.
    #[error("positivity hypotheses violated: {0}")]
    ConditionsViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
