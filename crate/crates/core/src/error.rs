use thiserror::Error;

/// Errors produced by channel construction and the numerical routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix failed validation (shape, negative entries, bad row sums,
    /// or a reducible positivity pattern).
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// A scalar or distribution parameter is out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Power iteration hit the iteration cap before reaching tolerance.
    #[error("spectral radius iteration did not converge within {0} iterations")]
    NonConvergent(usize),

    /// A log-space evaluation produced a non-finite result.
    #[error("result is not finite: {0}")]
    Overflow(f64),

    /// The MGF estimator collapsed onto too few effective samples to say
    /// anything about the mean.
    #[error("degenerate MGF estimate: effective sample size {ess:.2} is below {min}")]
    DegenerateEstimate { ess: f64, min: f64 },

    /// The queue has no stationary distribution at the requested load.
    #[error("unstable queue: arrival rate {arrival} >= mean service rate {service}")]
    Unstable { arrival: f64, service: f64 },

    /// Too few thresholds landed in the tail-fit probability window.
    #[error("insufficient tail data: {got} thresholds in the fit window, need at least {need}")]
    InsufficientTail { got: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
