//! Dense row-major matrices and the symmetric eigendecomposition.

use crate::error::{Error, Result};
use crate::linalg::tridiagonal::{ascending_permutation, ql_implicit, FullAccumulation};

/// Dense real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major entries, checking shape and finiteness.
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::domain(format!(
                "{rows}x{cols} matrix cannot hold {} entries",
                entries.len()
            )));
        }
        if !entries.iter().all(|x| x.is_finite()) {
            return Err(Error::domain("matrix entries must be finite"));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Stacks column vectors (all of equal length) into an n x m matrix.
    pub fn from_columns(columns: &[Vec<f64>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len(), "matvec shape mismatch");
        let mut y = vec![0.0; self.rows];
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    /// y = A^T x.
    pub fn tr_matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.rows, x.len(), "tr_matvec shape mismatch");
        let mut y = vec![0.0; self.cols];
        for i in 0..self.rows {
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            for j in 0..self.cols {
                y[j] += self[(i, j)] * xi;
            }
        }
        y
    }

    /// Largest absolute entry.
    pub fn norm_max(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Largest absolute deviation from symmetry.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    /// Returns (A + A^T) / 2.
    pub fn symmetrized(&self) -> DenseMatrix {
        assert!(self.is_square());
        let mut s = self.clone();
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                let avg = 0.5 * (self[(i, j)] + self[(j, i)]);
                s[(i, j)] = avg;
                s[(j, i)] = avg;
            }
        }
        s
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.entries[i * self.cols + j]
    }
}

/// Relative asymmetry tolerance accepted by [`dense_sym_eigen`].
pub const SYMMETRY_RTOL: f64 = 1e-12;

/// Eigendecomposition B = Q diag(lambda) Q^T of a symmetric matrix.
///
/// Householder tridiagonalization followed by implicit QL with full
/// eigenvector accumulation. Eigenvalues ascending, eigenvectors the
/// corresponding columns of Q. Callers symmetrize first; asymmetry beyond
/// `1e-12 * |B|` is a contract violation.
pub fn dense_sym_eigen(b: &DenseMatrix) -> Result<(Vec<f64>, DenseMatrix)> {
    if !b.is_square() {
        return Err(Error::domain("dense_sym_eigen needs a square matrix"));
    }
    let scale = b.norm_max();
    let asymmetry = b.asymmetry();
    if asymmetry > SYMMETRY_RTOL * scale.max(1.0) {
        return Err(Error::NotSymmetric {
            asymmetry,
            tolerance: SYMMETRY_RTOL * scale.max(1.0),
        });
    }

    let n = b.nrows();
    if n == 0 {
        return Ok((vec![], DenseMatrix::zeros(0, 0)));
    }
    let mut a = b.symmetrized();
    let mut q = DenseMatrix::identity(n);

    // Householder similarity transforms reduce A to tridiagonal form while
    // Q accumulates the product of reflectors.
    for k in 0..n.saturating_sub(2) {
        let mut norm2 = 0.0;
        for i in (k + 1)..n {
            norm2 += a[(i, k)] * a[(i, k)];
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = -norm.copysign(a[(k + 1, k)]);
        let mut v = vec![0.0; n];
        v[k + 1] = a[(k + 1, k)] - alpha;
        for i in (k + 2)..n {
            v[i] = a[(i, k)];
        }
        let vtv: f64 = v.iter().map(|x| x * x).sum();
        if vtv == 0.0 {
            continue;
        }
        let beta = 2.0 / vtv;

        // Symmetric update A <- (I - beta v v^T) A (I - beta v v^T).
        let av = a.matvec(&v);
        let p: Vec<f64> = av.iter().map(|x| beta * x).collect();
        let vtp: f64 = v.iter().zip(&p).map(|(a, b)| a * b).sum();
        let kappa = 0.5 * beta * vtp;
        let w: Vec<f64> = p
            .iter()
            .zip(&v)
            .map(|(pi, vi)| pi - kappa * vi)
            .collect();
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] -= v[i] * w[j] + w[i] * v[j];
            }
        }

        // Q <- Q (I - beta v v^T).
        for i in 0..n {
            let mut dot = 0.0;
            for j in (k + 1)..n {
                dot += q[(i, j)] * v[j];
            }
            let dot = beta * dot;
            for j in (k + 1)..n {
                q[(i, j)] -= dot * v[j];
            }
        }
    }

    let mut d: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    let mut e: Vec<f64> = (0..n - 1).map(|i| a[(i + 1, i)]).collect();
    let mut sink = FullAccumulation {
        q: {
            let mut flat = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    flat[i * n + j] = q[(i, j)];
                }
            }
            flat
        },
        n,
    };
    ql_implicit(&mut d, &mut e, &mut sink)?;

    let perm = ascending_permutation(&d);
    let values: Vec<f64> = perm.iter().map(|&i| d[i]).collect();
    let mut vectors = DenseMatrix::zeros(n, n);
    for (new_j, &old_j) in perm.iter().enumerate() {
        for i in 0..n {
            vectors[(i, new_j)] = sink.q[i * n + old_j];
        }
    }
    Ok((values, vectors))
}
