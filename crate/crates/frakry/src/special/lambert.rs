//! Principal-branch Lambert-W on the nonnegative axis.

use crate::error::{Error, Result};

/// Residual target: |w e^w - x| <= RESIDUAL_RTOL * max(1, x).
const RESIDUAL_RTOL: f64 = 1e-14;

/// W(x) for x >= 0, solving w e^w = x by Halley iteration started from
/// ln(1 + x).
pub fn lambert_w(x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "lambert_w needs a finite x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    for _ in 0..50 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if step.abs() <= f64::EPSILON * w.abs().max(1.0) {
            break;
        }
    }
    let residual = (w * w.exp() - x).abs();
    if residual > RESIDUAL_RTOL * x.max(1.0) {
        return Err(Error::inconsistency(format!(
            "lambert_w residual {residual:.3e} at x = {x:.6e}"
        )));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent bisection oracle on w e^w = x.
    fn lambert_bisect(x: f64) -> f64 {
        let mut lo = 0.0f64;
        let mut hi = 1.0f64;
        while hi * hi.exp() < x {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid * mid.exp() < x {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-12 * hi.max(1.0) {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn zero_maps_to_zero() {
        assert_eq!(lambert_w(0.0).unwrap(), 0.0);
    }

    #[test]
    fn w_of_e_is_one() {
        let w = lambert_w(std::f64::consts::E).unwrap();
        assert!((w - 1.0).abs() < 1e-14);
    }

    #[test]
    fn w_of_ten_matches_bisection() {
        let w = lambert_w(10.0).unwrap();
        assert!((w - 1.745528003).abs() < 1e-9);
        assert!((w - lambert_bisect(10.0)).abs() < 1e-11);
    }

    #[test]
    fn rejects_negative() {
        assert!(lambert_w(-0.1).is_err());
        assert!(lambert_w(f64::NAN).is_err());
    }

    #[test]
    fn monotone_and_accurate_on_log_grid() {
        let mut prev = -1.0;
        for i in 0..=72 {
            // 10^-6 .. 10^12 log-spaced.
            let x = 10f64.powf(-6.0 + 0.25 * i as f64);
            let w = lambert_w(x).unwrap();
            assert!(w > prev, "monotonicity broke at x = {x}");
            let residual = (w * w.exp() - x).abs();
            assert!(residual <= 1e-14 * x.max(1.0), "residual {residual} at {x}");
            prev = w;
        }
    }

    proptest! {
        #[test]
        fn halley_agrees_with_bisection(exp in -5.0f64..10.0) {
            let x = 10f64.powf(exp);
            let w = lambert_w(x).unwrap();
            let oracle = lambert_bisect(x);
            prop_assert!((w - oracle).abs() <= 1e-10 * oracle.max(1.0));
        }
    }
}
