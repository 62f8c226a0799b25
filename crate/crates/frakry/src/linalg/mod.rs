//! Self-contained dense, banded, and tridiagonal linear algebra kernels.

mod banded;
mod dense;
mod orthogonalize;
mod tridiagonal;

pub use banded::{banded_cholesky_solve, BandedCholesky, BandedSpd};
pub use dense::{dense_sym_eigen, DenseMatrix, SYMMETRY_RTOL};
pub use orthogonalize::{modified_gram_schmidt_step, GramSchmidtStep, BREAKDOWN_RTOL};
pub use tridiagonal::{sym_tridiag_eigen, SymTridiagonal};

pub(crate) use orthogonalize::norm;
