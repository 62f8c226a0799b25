//! Modified Gram-Schmidt with unconditional reorthogonalization.

/// Relative remainder threshold below which a direction counts as already
/// contained in the basis (lucky breakdown, not a failure).
pub const BREAKDOWN_RTOL: f64 = 1e-14;

/// Outcome of orthogonalizing one vector against an orthonormal basis.
#[derive(Debug, Clone)]
pub struct GramSchmidtStep {
    /// Projection coefficients onto the basis columns (both passes summed).
    pub coefficients: Vec<f64>,
    /// Norm of the remainder after projection.
    pub remainder_norm: f64,
    /// Unit remainder direction; `None` signals breakdown (`w` lay in the
    /// span of the basis to within [`BREAKDOWN_RTOL`]).
    pub next: Option<Vec<f64>>,
}

impl GramSchmidtStep {
    pub fn is_breakdown(&self) -> bool {
        self.next.is_none()
    }
}

/// One modified Gram-Schmidt step of `w` against orthonormal columns,
/// always followed by a second full pass (twice is enough at these basis
/// sizes, and stability matters more than the extra dot products).
pub fn modified_gram_schmidt_step(basis: &[Vec<f64>], w: &[f64]) -> GramSchmidtStep {
    let w_norm = norm(w);
    let mut r = w.to_vec();
    let mut coefficients = vec![0.0; basis.len()];
    for _pass in 0..2 {
        for (j, v) in basis.iter().enumerate() {
            debug_assert_eq!(v.len(), w.len());
            let h: f64 = v.iter().zip(&r).map(|(a, b)| a * b).sum();
            coefficients[j] += h;
            for (ri, vi) in r.iter_mut().zip(v) {
                *ri -= h * vi;
            }
        }
    }
    let remainder_norm = norm(&r);
    if remainder_norm <= BREAKDOWN_RTOL * w_norm {
        return GramSchmidtStep {
            coefficients,
            remainder_norm,
            next: None,
        };
    }
    for ri in &mut r {
        *ri /= remainder_norm;
    }
    GramSchmidtStep {
        coefficients,
        remainder_norm,
        next: Some(r),
    }
}

pub(crate) fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}
