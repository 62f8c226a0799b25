//! Crate-wide error type.

/// Errors reported by the numerical kernels and solvers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument fell outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Cholesky pivot came out nonpositive: the matrix is not SPD.
    #[error("matrix is not positive definite: nonpositive pivot at row {index}")]
    NotSpd { index: usize },

    /// The QL eigensolver exhausted its iteration budget.
    #[error("symmetric tridiagonal eigensolver failed to converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// A matrix required to be symmetric was not, beyond tolerance.
    #[error("matrix asymmetry {asymmetry:.3e} exceeds tolerance {tolerance:.3e}")]
    NotSymmetric { asymmetry: f64, tolerance: f64 },

    /// alpha = 2 is the classical Laplacian; the fractional pole
    /// construction does not apply and callers must use a plain resolvent.
    #[error("alpha = 2 is not fractional; use the classical resolvent path")]
    NotFractional,

    /// A projected (Rayleigh) eigenvalue escaped the declared spectral
    /// interval, indicating an operator/bounds mismatch.
    #[error("projected eigenvalue {value:.6e} outside [{lo:.6e}, {hi:.6e}]")]
    SpectralLeak { value: f64, lo: f64, hi: f64 },

    /// An internal structural invariant failed; indicates a bug upstream.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
