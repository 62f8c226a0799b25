//! Symmetric tridiagonal matrices and their eigendecomposition.
//!
//! The eigensolver is the implicit QL iteration with Wilkinson shifts. It is
//! dependency-free and entirely adequate for the orders that occur here
//! (Golub-Welsch matrices and projected Krylov matrices, order <= a few
//! hundred).

use crate::error::{Error, Result};

/// Iteration budget per eigenvalue before the QL sweep gives up.
const MAX_SWEEPS: usize = 50;

/// A symmetric tridiagonal matrix stored as diagonal and off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiagonal {
    /// Builds the matrix, checking length consistency and finiteness.
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::domain("tridiagonal matrix needs at least one row"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::domain(format!(
                "off-diagonal length {} does not match order {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if !diag.iter().chain(offdiag.iter()).all(|x| x.is_finite()) {
            return Err(Error::domain("tridiagonal entries must be finite"));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    /// Max-norm bound used for relative tolerances.
    pub fn norm_max(&self) -> f64 {
        self.diag
            .iter()
            .chain(self.offdiag.iter())
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }
}

/// Receives the Givens rotations applied by the QL sweep so callers can
/// accumulate whatever part of the eigenvector matrix they need.
pub(crate) trait RotationSink {
    /// Applies the rotation mixing columns `i` and `i + 1`:
    /// `(q_i, q_{i+1}) <- (c q_i - s q_{i+1}, s q_i + c q_{i+1})`.
    fn rotate(&mut self, i: usize, c: f64, s: f64);
}

pub(crate) struct NoAccumulation;

impl RotationSink for NoAccumulation {
    fn rotate(&mut self, _i: usize, _c: f64, _s: f64) {}
}

/// Tracks a single row of the accumulated eigenvector matrix. Seeding with
/// `e_1` yields the first component of every eigenvector, which is all
/// Golub-Welsch needs for quadrature weights.
pub(crate) struct RowAccumulation {
    pub row: Vec<f64>,
}

impl RowAccumulation {
    pub fn first_row(n: usize) -> Self {
        let mut row = vec![0.0; n];
        row[0] = 1.0;
        Self { row }
    }
}

impl RotationSink for RowAccumulation {
    fn rotate(&mut self, i: usize, c: f64, s: f64) {
        let a = self.row[i];
        let b = self.row[i + 1];
        self.row[i] = c * a - s * b;
        self.row[i + 1] = s * a + c * b;
    }
}

/// Accumulates the full eigenvector matrix, starting from a caller-supplied
/// basis (identity for a plain tridiagonal, the Householder product for a
/// dense matrix that was tridiagonalized first).
pub(crate) struct FullAccumulation {
    /// Row-major n x n.
    pub q: Vec<f64>,
    pub n: usize,
}

impl RotationSink for FullAccumulation {
    fn rotate(&mut self, i: usize, c: f64, s: f64) {
        for k in 0..self.n {
            let a = self.q[k * self.n + i];
            let b = self.q[k * self.n + i + 1];
            self.q[k * self.n + i] = c * a - s * b;
            self.q[k * self.n + i + 1] = s * a + c * b;
        }
    }
}

/// Implicit QL with Wilkinson shifts on (d, e); `e[i]` couples rows i and
/// i+1. On success `d` holds the (unsorted) eigenvalues and the applied
/// rotations have been fed to `sink`.
pub(crate) fn ql_implicit<S: RotationSink>(
    d: &mut [f64],
    e: &mut [f64],
    sink: &mut S,
) -> Result<()> {
    let n = d.len();
    debug_assert_eq!(e.len() + 1, n.max(1));
    if n <= 1 {
        return Ok(());
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible off-diagonal to split the problem.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
            }
            // Wilkinson shift from the leading 2x2.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow_restart = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Rotation annihilated early; defuse and restart.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow_restart = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                sink.rotate(i, c, s);
            }
            if underflow_restart {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Sorting permutation for ascending eigenvalues.
pub(crate) fn ascending_permutation(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    idx
}

/// Eigenvalues of a symmetric tridiagonal matrix, ascending; optionally the
/// first component of each normalized eigenvector (enough for quadrature
/// weights).
pub fn sym_tridiag_eigen(
    t: &SymTridiagonal,
    want_first_components: bool,
) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let n = t.order();
    let mut d = t.diag.clone();
    let mut e = t.offdiag.clone();
    if want_first_components {
        let mut sink = RowAccumulation::first_row(n);
        ql_implicit(&mut d, &mut e, &mut sink)?;
        let perm = ascending_permutation(&d);
        let values = perm.iter().map(|&i| d[i]).collect();
        let firsts = perm.iter().map(|&i| sink.row[i]).collect();
        Ok((values, Some(firsts)))
    } else {
        ql_implicit(&mut d, &mut e, &mut NoAccumulation)?;
        d.sort_by(f64::total_cmp);
        Ok((d, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn toeplitz_3x3_closed_form() {
        // tridiag(-1, 2, -1): eigenvalues 2 - 2 cos(j pi / 4).
        let t = SymTridiagonal::new(vec![2.0, 2.0, 2.0], vec![-1.0, -1.0]).unwrap();
        let (vals, _) = sym_tridiag_eigen(&t, false).unwrap();
        let sqrt2 = 2.0f64.sqrt();
        assert_close(vals[0], 2.0 - sqrt2, 1e-13);
        assert_close(vals[1], 2.0, 1e-13);
        assert_close(vals[2], 2.0 + sqrt2, 1e-13);
    }

    #[test]
    fn one_by_one() {
        let t = SymTridiagonal::new(vec![5.0], vec![]).unwrap();
        let (vals, firsts) = sym_tridiag_eigen(&t, true).unwrap();
        assert_eq!(vals, vec![5.0]);
        assert_eq!(firsts.unwrap(), vec![1.0]);
    }

    #[test]
    fn two_by_two_antidiagonal() {
        let t = SymTridiagonal::new(vec![0.0, 0.0], vec![1.0]).unwrap();
        let (vals, _) = sym_tridiag_eigen(&t, false).unwrap();
        assert_close(vals[0], -1.0, 1e-14);
        assert_close(vals[1], 1.0, 1e-14);
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        // Deterministic pseudo-random coefficients.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        for n in [2usize, 5, 17, 60] {
            let diag: Vec<f64> = (0..n).map(|_| 4.0 * next()).collect();
            let off: Vec<f64> = (0..n - 1).map(|_| 2.0 * next()).collect();
            let t = SymTridiagonal::new(diag, off).unwrap();
            let (vals, _) = sym_tridiag_eigen(&t, false).unwrap();
            let sum: f64 = vals.iter().sum();
            let scale = t.norm_max().max(1.0) * n as f64;
            assert_close(sum, t.trace(), 1e-12 * scale);
        }
    }

    #[test]
    fn first_components_are_normalized_rows() {
        // For tridiag(-1, 2, -1) eigenvectors are sines; the first component
        // of the normalized j-th eigenvector is sqrt(2/(n+1)) sin(j pi/(n+1)).
        let n = 7;
        let t = SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap();
        let (_, firsts) = sym_tridiag_eigen(&t, true).unwrap();
        let firsts = firsts.unwrap();
        let h = std::f64::consts::PI / (n as f64 + 1.0);
        for (j, &z) in firsts.iter().enumerate() {
            let expected = (2.0 / (n as f64 + 1.0)).sqrt() * ((j as f64 + 1.0) * h).sin();
            assert_close(z.abs(), expected.abs(), 1e-12);
        }
    }

    #[test]
    fn rejects_inconsistent_lengths() {
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymTridiagonal::new(vec![], vec![]).is_err());
        assert!(SymTridiagonal::new(vec![1.0, f64::NAN], vec![0.0]).is_err());
    }
}
