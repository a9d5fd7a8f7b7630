use thiserror::Error;

/// Errors raised by the analytic and numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// The product omega*k*m is not positive, or m = 0, so the geometric
    /// Coulomb term cannot bind.
    #[error("no bound state: omega*k*m = {coupling:e} with m = {m} (need omega*k*m > 0 and |m| >= 1)")]
    NoBoundState { coupling: f64, m: i32 },

    #[error("effective potential has no attractive well: {0}")]
    NoWell(String),

    #[error("grid under-resolved: spacing {spacing:e} m exceeds {required:e} m; use at least {suggested_npts} points")]
    UnderResolved {
        spacing: f64,
        required: f64,
        suggested_npts: usize,
    },

    #[error("potential is not finite at node {index} (r = {r:e} m)")]
    NonFinitePotential { index: usize, r: f64 },

    #[error("inverse iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("refinement sequence is not monotone: {0}")]
    NonMonotoneRefinement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
