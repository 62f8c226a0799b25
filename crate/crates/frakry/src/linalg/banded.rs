//! Banded symmetric positive definite matrices with cached Cholesky solves.
//!
//! Every shifted system in this crate (xi I + A for tridiagonal or
//! Kronecker-sum Laplacians) is banded, so a band Cholesky factored once per
//! shift covers all right-hand sides.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Symmetric positive definite band matrix. Only the lower bands are stored:
/// row `i` holds entries `A[i][j]` for `j` in `[i - b, i]`.
#[derive(Debug)]
pub struct BandedSpd {
    n: usize,
    bandwidth: usize,
    /// Row-major lower band storage, width `bandwidth + 1`; slot `d` of row
    /// `i` is `A[i][i - bandwidth + d]` (out-of-range slots stay zero).
    bands: Vec<f64>,
    factor: OnceLock<Result<BandedCholesky>>,
}

impl Clone for BandedSpd {
    fn clone(&self) -> Self {
        // The factorization cache restarts empty on the clone.
        Self {
            n: self.n,
            bandwidth: self.bandwidth,
            bands: self.bands.clone(),
            factor: OnceLock::new(),
        }
    }
}

impl BandedSpd {
    /// Zero matrix of the given order and bandwidth.
    pub fn zeros(n: usize, bandwidth: usize) -> Self {
        assert!(n > 0, "banded matrix needs at least one row");
        let bandwidth = bandwidth.min(n - 1);
        Self {
            n,
            bandwidth,
            bands: vec![0.0; n * (bandwidth + 1)],
            factor: OnceLock::new(),
        }
    }

    /// Symmetric tridiagonal input as a bandwidth-1 matrix.
    pub fn from_tridiagonal(diag: &[f64], offdiag: &[f64]) -> Self {
        assert_eq!(diag.len(), offdiag.len() + 1);
        let mut m = Self::zeros(diag.len(), 1);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        for (i, &e) in offdiag.iter().enumerate() {
            m.set(i + 1, i, e);
        }
        m
    }

    /// Wraps the lower triangle of a dense symmetric matrix (full bandwidth).
    pub fn from_dense_lower(n: usize, lower: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n, n.saturating_sub(1));
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, lower(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(j <= i && i - j <= self.bandwidth);
        i * (self.bandwidth + 1) + (self.bandwidth - (i - j))
    }

    /// Entry (i, j) of the full matrix (either triangle).
    pub fn at(&self, i: usize, j: usize) -> f64 {
        let (r, c) = if i >= j { (i, j) } else { (j, i) };
        if r - c > self.bandwidth {
            0.0
        } else {
            self.bands[self.slot(r, c)]
        }
    }

    /// Sets the lower-triangle entry (i, j), `j <= i`, within the band.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(j <= i && i - j <= self.bandwidth, "entry outside band");
        let s = self.slot(i, j);
        self.bands[s] = value;
        debug_assert!(self.factor.get().is_none(), "mutating a factored matrix");
    }

    /// Adds `shift` to every diagonal entry (consumes to keep any cached
    /// factorization consistent).
    pub fn shifted(mut self, shift: f64) -> Self {
        for i in 0..self.n {
            let s = self.slot(i, i);
            self.bands[s] += shift;
        }
        self.factor = OnceLock::new();
        self
    }

    /// y = A x using the symmetric band structure.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bandwidth);
            for j in lo..=i {
                let a = self.bands[self.slot(i, j)];
                y[i] += a * x[j];
                if j != i {
                    y[j] += a * x[i];
                }
            }
        }
        y
    }

    pub fn norm_max(&self) -> f64 {
        self.bands.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// The cached Cholesky factorization (computed on first use).
    pub fn cholesky(&self) -> Result<&BandedCholesky> {
        self.factor
            .get_or_init(|| BandedCholesky::factor(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Solves A x = rhs, factoring once and reusing the factor for later
    /// right-hand sides.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        Ok(self.cholesky()?.solve(rhs))
    }
}

/// Solves `M x = rhs` by banded Cholesky; the factorization is cached inside
/// `m` and reused across calls.
pub fn banded_cholesky_solve(m: &BandedSpd, rhs: &[f64]) -> Result<Vec<f64>> {
    m.solve(rhs)
}

/// Lower band Cholesky factor L with A = L L^T.
#[derive(Debug, Clone)]
pub struct BandedCholesky {
    n: usize,
    bandwidth: usize,
    bands: Vec<f64>,
}

impl BandedCholesky {
    fn factor(a: &BandedSpd) -> Result<Self> {
        let n = a.n;
        let b = a.bandwidth;
        let width = b + 1;
        let mut l = vec![0.0; n * width];
        let slot = |i: usize, j: usize| i * width + (b - (i - j));
        for i in 0..n {
            let lo = i.saturating_sub(b);
            for j in lo..=i {
                let mut sum = a.bands[a.slot(i, j)];
                for k in lo..j {
                    sum -= l[slot(i, k)] * l[slot(j, k)];
                }
                if i == j {
                    if sum <= 0.0 {
                        return Err(Error::NotSpd { index: i });
                    }
                    l[slot(i, i)] = sum.sqrt();
                } else {
                    l[slot(i, j)] = sum / l[slot(j, j)];
                }
            }
        }
        Ok(Self {
            n,
            bandwidth: b,
            bands: l,
        })
    }

    /// Solves L L^T x = rhs.
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        assert_eq!(rhs.len(), self.n);
        let b = self.bandwidth;
        let width = b + 1;
        let slot = |i: usize, j: usize| i * width + (b - (i - j));
        // Forward: L y = rhs.
        let mut y = rhs.to_vec();
        for i in 0..self.n {
            let lo = i.saturating_sub(b);
            let mut sum = y[i];
            for k in lo..i {
                sum -= self.bands[slot(i, k)] * y[k];
            }
            y[i] = sum / self.bands[slot(i, i)];
        }
        // Backward: L^T x = y.
        for i in (0..self.n).rev() {
            let hi = (i + b).min(self.n - 1);
            let mut sum = y[i];
            for k in (i + 1)..=hi {
                sum -= self.bands[slot(k, i)] * y[k];
            }
            y[i] = sum / self.bands[slot(i, i)];
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_returns_rhs() {
        let mut m = BandedSpd::zeros(4, 0);
        for i in 0..4 {
            m.set(i, i, 1.0);
        }
        let rhs = vec![3.0, -1.0, 0.5, 2.0];
        let x = banded_cholesky_solve(&m, &rhs).unwrap();
        for (a, b) in x.iter().zip(&rhs) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn tridiagonal_hand_solve() {
        let m = BandedSpd::from_tridiagonal(&[2.0, 2.0, 2.0], &[-1.0, -1.0]);
        let x = banded_cholesky_solve(&m, &[1.0, 0.0, 0.0]).unwrap();
        assert!((x[0] - 0.75).abs() < 1e-14);
        assert!((x[1] - 0.5).abs() < 1e-14);
        assert!((x[2] - 0.25).abs() < 1e-14);
    }

    #[test]
    fn reports_nonpositive_pivot() {
        let mut m = BandedSpd::zeros(3, 1);
        m.set(0, 0, 1.0);
        m.set(1, 0, 2.0); // makes the second pivot 1 - 4 < 0
        m.set(1, 1, 1.0);
        m.set(2, 2, 1.0);
        match banded_cholesky_solve(&m, &[1.0, 1.0, 1.0]) {
            Err(Error::NotSpd { index }) => assert_eq!(index, 1),
            other => panic!("expected NotSpd, got {other:?}"),
        }
    }

    /// rhs residual oracle on random diagonally dominant band matrices.
    #[test]
    fn random_banded_residuals() {
        let mut rng = StdRng::seed_from_u64(7);
        for trial in 0..100 {
            let n = rng.gen_range(2..=50);
            let b = rng.gen_range(0..=5usize).min(n - 1);
            let mut m = BandedSpd::zeros(n, b);
            for i in 0..n {
                let lo = i.saturating_sub(b);
                for j in lo..i {
                    m.set(i, j, rng.gen_range(-1.0..1.0));
                }
            }
            // Diagonal dominance guarantees SPD.
            for i in 0..n {
                let lo = i.saturating_sub(b);
                let hi = (i + b).min(n - 1);
                let mut row_sum = 0.0;
                for j in lo..=hi {
                    if j != i {
                        row_sum += m.at(i, j).abs();
                    }
                }
                m.set(i, i, row_sum + rng.gen_range(0.5..2.0));
            }
            let rhs: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let x = banded_cholesky_solve(&m, &rhs).unwrap();
            let ax = m.matvec(&x);
            let norm_x = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            let norm_rhs = rhs.iter().map(|v| v * v).sum::<f64>().sqrt();
            let tol = 1e-12 * (m.norm_max() * norm_x + norm_rhs);
            for i in 0..n {
                assert!(
                    (ax[i] - rhs[i]).abs() <= tol,
                    "trial {trial}: residual {} exceeds {tol}",
                    (ax[i] - rhs[i]).abs()
                );
            }
        }
    }

    #[test]
    fn factorization_is_cached() {
        let m = BandedSpd::from_tridiagonal(&[2.0, 2.0], &[-1.0]);
        let first = m.cholesky().unwrap() as *const BandedCholesky;
        let second = m.cholesky().unwrap() as *const BandedCholesky;
        assert_eq!(first, second);
    }

    #[test]
    fn shifted_adds_to_diagonal() {
        let m = BandedSpd::from_tridiagonal(&[2.0, 2.0], &[-1.0]).shifted(3.0);
        assert_eq!(m.at(0, 0), 5.0);
        assert_eq!(m.at(1, 0), -1.0);
    }
}
