//! Special functions behind the pole construction: Lambert-W, log-gamma,
//! and Gauss-Jacobi quadrature.

mod gamma;
mod lambert;
mod quadrature;

pub use gamma::{ln_beta, ln_gamma};
pub use lambert::lambert_w;
pub use quadrature::{gauss_jacobi, jacobi_zeros, JacobiParams, QuadratureRule};
