use thiserror::Error;

/// Errors raised by evaluators, bounds and the sweep engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "modulus t = {0} is outside the open interval (0, 1); \
         the limits are E(0) = F(0) = π/2, E(1) = 1 and F(1) = +∞"
    )]
    InvalidModulus(f64),

    #[error("semi-axes must be strictly positive and finite, got a = {a}, b = {b}")]
    InvalidAxes { a: f64, b: f64 },

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),

    #[error("parameter outside the domain of the operation: {0}")]
    Domain(String),

    #[error("AGM iteration did not converge after {iterations} steps")]
    NonConvergence { iterations: usize },

    #[error(
        "quadrature tolerance {tolerance:e} not met at maximum depth \
         (value {value}, estimated error {est_error:e})"
    )]
    ToleranceNotMet {
        value: f64,
        est_error: f64,
        tolerance: f64,
    },

    #[error("quadrature diverges: error estimate stopped shrinking near x = {x}")]
    Divergent { x: f64 },

    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },

    #[error("unknown record id `{0}`")]
    UnknownRecord(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("no grid point satisfies the guard of `{id}` ({guard})")]
    GuardEmpty { id: String, guard: String },

    #[error("report serialization failed: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
