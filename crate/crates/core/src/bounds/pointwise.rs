use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Quadratic sandwich of `√(1 + t² cos²θ)` on `[0, π/2]`.
///
/// With `B = √(1+t²)`, returns `(lhs, mid)` where
///
/// ```text
/// lhs = −(8/π²)(B − 1) θ (π/2 − θ)
/// mid = √(1 + t² cos²θ) − [B − (4/π²)(B − 1) θ²]
/// ```
///
/// and the inequality reads `lhs ≤ mid ≤ 0`. Integrating it over `θ` gives the
/// enclosure of `F(a, b)` and the ellipse quarter-perimeter bounds.
pub fn quadratic_sandwich(t: f64, theta: f64) -> Result<(f64, f64)> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("need t > 0, got {t}")));
    }
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::Domain(format!("need θ ∈ [0, π/2], got {theta}")));
    }
    let root = 1f64.hypot(t);
    let excess = t * t / (root + 1.0);
    let k = 4.0 / (PI * PI);
    let lhs = -2.0 * k * excess * theta * (FRAC_PI_2 - theta);
    let mid = 1f64.hypot(t * theta.cos()) - (root - k * excess * theta * theta);
    Ok((lhs, mid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishes_at_both_ends() {
        for t in [0.1, 1.0, 5.0] {
            assert_eq!(quadratic_sandwich(t, 0.0).unwrap(), (0.0, 0.0));
            let (lhs, mid) = quadratic_sandwich(t, FRAC_PI_2).unwrap();
            assert_eq!(lhs, 0.0);
            assert!(mid.abs() < 1e-15);
        }
    }

    #[test]
    fn holds_at_quarter_angle() {
        let (lhs, mid) = quadratic_sandwich(1.0, PI / 4.0).unwrap();
        // direct: √1.5 − [√2 − (√2 − 1)/4] and −(√2 − 1)/2
        let expect_mid = 1.5f64.sqrt() - (2f64.sqrt() - (2f64.sqrt() - 1.0) / 4.0);
        let expect_lhs = -(2f64.sqrt() - 1.0) / 2.0;
        assert!((mid - expect_mid).abs() < 1e-15 && (lhs - expect_lhs).abs() < 1e-15);
        assert!(lhs <= mid && mid <= 0.0);
    }

    #[test]
    fn domain() {
        assert!(quadratic_sandwich(0.0, 0.1).is_err());
        assert!(quadratic_sandwich(1.0, -0.1).is_err());
        assert!(quadratic_sandwich(1.0, 2.0).is_err());
    }
}
