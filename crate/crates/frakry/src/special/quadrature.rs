//! Gauss-Jacobi quadrature via Golub-Welsch.

use crate::error::{Error, Result};
use crate::linalg::{sym_tridiag_eigen, SymTridiagonal};
use crate::special::gamma::ln_beta;

/// Exponents of the Jacobi weight (1 - x)^a (1 + x)^b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub a: f64,
    pub b: f64,
}

impl JacobiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > -1.0 && b > -1.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::domain(format!(
                "Jacobi exponents must be > -1, got a = {a}, b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// Total mass of the weight: mu_0 = 2^(a+b+1) B(a+1, b+1).
    pub fn total_mass(&self) -> f64 {
        2f64.powf(self.a + self.b + 1.0) * ln_beta(self.a + 1.0, self.b + 1.0).exp()
    }
}

/// Nodes (ascending, inside (-1, 1)) and positive weights of a Gaussian rule.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    fn new(nodes: Vec<f64>, weights: Vec<f64>, mass: f64) -> Result<Self> {
        if nodes.len() != weights.len() {
            return Err(Error::inconsistency("node/weight length mismatch"));
        }
        for pair in nodes.windows(2) {
            if !(pair[0] < pair[1]) {
                return Err(Error::inconsistency("quadrature nodes not increasing"));
            }
        }
        if nodes.iter().any(|&x| !(-1.0 < x && x < 1.0)) {
            return Err(Error::inconsistency("quadrature node outside (-1, 1)"));
        }
        if weights.iter().any(|&w| !(w > 0.0)) {
            return Err(Error::inconsistency("nonpositive quadrature weight"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - mass).abs() > 1e-12 * mass.abs().max(1.0) {
            return Err(Error::inconsistency(format!(
                "weight sum {sum:.16e} does not match weight-function mass {mass:.16e}"
            )));
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Sum of w_j f(x_j).
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// The k-point Gauss-Jacobi rule for the weight (1 - x)^a (1 + x)^b.
///
/// Nodes are the eigenvalues of the Golub-Welsch symmetric tridiagonal
/// matrix built from the three-term recurrence; weights come from the first
/// eigenvector components scaled by the weight-function mass.
pub fn gauss_jacobi(k: usize, p: JacobiParams) -> Result<QuadratureRule> {
    if k == 0 {
        return Err(Error::domain("gauss_jacobi needs k >= 1"));
    }
    let (a, b) = (p.a, p.b);
    let ab = a + b;
    let mut diag = Vec::with_capacity(k);
    let mut off = Vec::with_capacity(k.saturating_sub(1));
    diag.push((b - a) / (ab + 2.0));
    for i in 1..k {
        let i = i as f64;
        let denom = 2.0 * i + ab;
        diag.push((b * b - a * a) / (denom * (denom + 2.0)));
        let beta = if i == 1.0 {
            // The generic formula is 0/0 at i = 1 when a + b = -1; the
            // (i + a + b) factor cancels against (2i + a + b - 1).
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
        } else {
            4.0 * i * (i + a) * (i + b) * (i + ab)
                / (denom * denom * (denom + 1.0) * (denom - 1.0))
        };
        off.push(beta.sqrt());
    }
    // Off-diagonal beta_i was pushed for the coupling (i-1, i); reorder is
    // already correct since we appended in index order.
    let t = SymTridiagonal::new(diag, off)?;
    let (nodes, firsts) = sym_tridiag_eigen(&t, true)?;
    let firsts = firsts.expect("first components requested");
    let mass = p.total_mass();
    let weights: Vec<f64> = firsts.iter().map(|z| mass * z * z).collect();
    QuadratureRule::new(nodes, weights, mass)
}

/// The m zeros of the degree-m Jacobi polynomial for parameters `p`,
/// ascending and strictly inside (-1, 1). `m = 0` returns an empty list.
pub fn jacobi_zeros(m: usize, p: JacobiParams) -> Result<Vec<f64>> {
    if m == 0 {
        return Ok(vec![]);
    }
    Ok(gauss_jacobi(m, p)?.nodes.clone())
}
