//! Rational Krylov methods for fractional-power matrix functions.
//!
//! The crate computes the action of `A^{-alpha/2} v` and
//! `(I + nu A^{alpha/2})^{-1} v` for symmetric positive definite `A` by
//! projecting onto Krylov subspaces. The rational variant draws its poles
//! from a Gauss-Jacobi quadrature construction whose scale parameter comes
//! from a Lambert-W formula; the resulting poles are real, simple and
//! positive, so everything runs in real arithmetic.
//!
//! On top of the matrix-function kernel sit finite-difference
//! discretizations of the Laplacian on the unit interval/square and steady
//! and time-dependent fractional diffusion drivers (backward Euler and an
//! IMEX backward Euler step for the semilinear Allen-Cahn reaction term).
//!
//! Modules, bottom up:
//! - [`linalg`]: dense/banded/tridiagonal kernels everything else rests on.
//! - [`special`]: Lambert-W, log-gamma, Gauss-Jacobi quadrature.
//! - [`poles`]: the rational approximation of `z^{-alpha/2}` and pole sets.
//! - [`krylov`]: subspace builders and `f(A) v` evaluation.
//! - [`discretize`]: FD Laplacians and the exact spectral reference.
//! - [`solvers`]: steady-state and time-stepping drivers.

pub mod error;
pub mod linalg;
pub mod special;
pub mod poles;
pub mod krylov;
pub mod discretize;
pub mod solvers;

pub use error::{Error, Result};
