use thiserror::Error;

/// Errors reported by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A physical or numerical parameter violates its precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested operation is undefined for a vanishing Coulomb coupling.
    ///
    /// With f = 0 the frequency is not quantized; any omega > 0 is admissible
    /// and callers should use the pure-oscillator path instead.
    #[error("degenerate case (f = 0): {0}")]
    DegenerateCase(String),

    /// A mode index beyond the number of admissible roots was requested.
    #[error("root index {index} out of range: {count} admissible root(s) found")]
    RootNotFound { index: usize, count: usize },

    /// Series evaluation stopped before the tail bound reached the requested
    /// tolerance.
    #[error("series tail not converged: achieved bound {achieved:e}, requested {requested:e}")]
    TailNotConverged { achieved: f64, requested: f64 },

    /// The integration domain truncates too much of the integrand.
    #[error("integration tail too large: integrand at xi_max is {tail_fraction:e} of its peak (limit {limit:e}); increase xi_max")]
    TailTooLarge { tail_fraction: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
