//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Construction of a domain type failed its invariants.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An operation was called outside its domain (out-of-range argument,
    /// empty input, malformed configuration).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature exhausted its subdivision budget before reaching
    /// the requested tolerance; `achieved` is the error estimate at exit.
    #[error("quadrature did not converge: requested {requested:e}, achieved {achieved:e}")]
    QuadratureNonConvergence { requested: f64, achieved: f64 },

    /// A numerical check failed (non-finite intermediate, degenerate
    /// variance, violated monotonicity, insufficient grid coverage).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// The Markov chain aborted; `iteration` is the failing step.
    #[error("sampler failed at iteration {iteration}: {message}")]
    Sampler { iteration: usize, message: String },
}
