//! Estimates obtained from Chebyshev's integral inequality for similarly (or
//! oppositely) ordered functions, together with the parameter guards under
//! which each one is asserted.
//!
//! `Π(t, h)` below is the complete integral of the third kind with
//! characteristic `h`; see [`crate::reference::pi_quad`].

use std::f64::consts::{LN_2, PI, SQRT_2};

/// Lower side of `π·arcsin t / (2t) < F(t) < (π/(4t)) ln((1+t)/(1−t))`.
pub fn f_arcsin_lower(t: f64) -> f64 {
    PI * t.asin() / (2.0 * t)
}

/// Upper side of the same pair, written as `π·atanh(t) / (2t)`.
pub fn f_log_upper(t: f64) -> f64 {
    PI * t.atanh() / (2.0 * t)
}

/// `(16 − 4t² − 3t⁴) / (4(4 + t²))`; the claim is `E(t) < factor · F(t)`.
pub fn e_over_f_upper_factor(t: f64) -> f64 {
    let t2 = t * t;
    (16.0 - 4.0 * t2 - 3.0 * t2 * t2) / (4.0 * (4.0 + t2))
}

/// `(16 − 28t² + 9t⁴) / (4(4 − 5t²))`; the claim is `E(t) ≥ factor · F(t)`
/// for `t² ≤ 2/3`.
pub fn e_over_f_lower_factor(t: f64) -> f64 {
    let t2 = t * t;
    (16.0 - 28.0 * t2 + 9.0 * t2 * t2) / (4.0 * (4.0 - 5.0 * t2))
}

/// `1 + h/2`; the claim is `F(t) < (1 + h/2) Π(t, h)` under
/// [`third_kind_guard`], reversed under [`third_kind_reversed_guard`].
pub fn third_kind_factor(h: f64) -> f64 {
    1.0 + 0.5 * h
}

/// `π² / (4√(1+h))`; the claim is `Π(t, h) E(t) > bound` under
/// [`product_guard`], reversed under [`product_reversed_guard`].
pub fn product_bound(h: f64) -> f64 {
    PI * PI / (4.0 * (1.0 + h).sqrt())
}

/// `t² / (2 − 3t²)` when `t² < 2/3`.
fn large_characteristic_threshold(t: f64) -> Option<f64> {
    let t2 = t * t;
    let denom = 2.0 - 3.0 * t2;
    (denom > 0.0).then(|| t2 / denom)
}

/// `−1 < h < 0`, or `h > t²/(2 − 3t²) > 0`.
pub fn third_kind_guard(t: f64, h: f64) -> bool {
    (-1.0 < h && h < 0.0) || large_characteristic_threshold(t).is_some_and(|th| h > th)
}

/// `0 < 2h < t²`.
pub fn third_kind_reversed_guard(t: f64, h: f64) -> bool {
    0.0 < 2.0 * h && 2.0 * h < t * t
}

/// `−2 < 2h < t²`.
pub fn product_guard(t: f64, h: f64) -> bool {
    -2.0 < 2.0 * h && 2.0 * h < t * t
}

/// `h > t²/(2 − 3t²) > 0`.
pub fn product_reversed_guard(t: f64, h: f64) -> bool {
    large_characteristic_threshold(t).is_some_and(|th| h > th)
}

/// `t² ≤ 2/3`.
pub fn lower_factor_guard(t: f64) -> bool {
    3.0 * t * t <= 2.0
}

/// `(1 − sin²x / 2)^{−1/2}`, whose integral over `[0, π/2]` is `F(1/√2)`.
pub fn lemniscatic_integrand(x: f64) -> f64 {
    (1.0 - 0.5 * x.sin().powi(2)).sqrt().recip()
}

/// `π²/(4√2)`.
pub const LEMNISCATIC_LOWER: f64 = PI * PI / (4.0 * SQRT_2);
/// `π ln(1 + √2) / √2`.
pub const LEMNISCATIC_UPPER: f64 = PI * 0.881_373_587_019_543_025_232_609_3 / SQRT_2;

/// `(1 + cos x / 2)^{−1}`.
pub fn half_cos_integrand(x: f64) -> f64 {
    (1.0 + 0.5 * x.cos()).recip()
}

/// `π(ln 3 − ln 2)/2`, asserted as an upper bound for the integral of
/// [`half_cos_integrand`] over `[0, π/2]`.
pub const HALF_COS_UPPER: f64 = PI * (1.098_612_288_668_109_691_395_245_2 - LN_2) / 2.0;

/// `(1 − sin x / 2)^{−1}`.
pub fn half_sin_integrand(x: f64) -> f64 {
    (1.0 - 0.5 * x.sin()).recip()
}

/// `π ln 2 / 2`, a lower bound for the integral of [`half_sin_integrand`]
/// over `[0, π/2]`.
pub const HALF_SIN_LOWER: f64 = PI * LN_2 / 2.0;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{e_agm, f_agm, integrate, pi_quad, Modulus, QuadratureConfig};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    #[test]
    fn transcendental_constants() {
        approx::assert_relative_eq!(
            LEMNISCATIC_UPPER,
            PI * (1.0 + SQRT_2).ln() / SQRT_2,
            max_relative = 4.0 * f64::EPSILON
        );
        assert!((HALF_COS_UPPER - PI * (3f64.ln() - 2f64.ln()) / 2.0).abs() < 1e-16);
    }

    #[test]
    fn arcsin_side_at_half() {
        assert!((f_arcsin_lower(0.5) - PI * PI / 6.0).abs() < 1e-15);
    }

    #[test]
    fn lemniscatic_fixture_is_the_arcsin_log_pair() {
        assert!((f_arcsin_lower(FRAC_1_SQRT_2) - LEMNISCATIC_LOWER).abs() < 1e-15);
        assert!((f_log_upper(FRAC_1_SQRT_2) - LEMNISCATIC_UPPER).abs() < 1e-15);
        let cfg = QuadratureConfig::default();
        let v = integrate(lemniscatic_integrand, 0.0, FRAC_PI_2, &cfg)
            .unwrap()
            .value;
        let f = f_agm(Modulus::new(FRAC_1_SQRT_2).unwrap()).unwrap().value;
        assert!((v - f).abs() < 1e-14);
        assert!(LEMNISCATIC_LOWER < v && v < LEMNISCATIC_UPPER);
    }

    #[test]
    fn half_sin_fixture() {
        let cfg = QuadratureConfig::default();
        let v = integrate(half_sin_integrand, 0.0, FRAC_PI_2, &cfg)
            .unwrap()
            .value;
        let shifted = integrate(half_cos_integrand, FRAC_PI_2, PI, &cfg)
            .unwrap()
            .value;
        assert!((v - shifted).abs() < 1e-14);
        assert!(v > HALF_SIN_LOWER);
    }

    #[test]
    fn half_cos_fixture_as_printed_does_not_hold() {
        // ∫₀^{π/2} dx/(1 + cos x/2) = (4/√3)·arctan(1/√3) = 2π/(3√3)
        let cfg = QuadratureConfig::default();
        let v = integrate(half_cos_integrand, 0.0, FRAC_PI_2, &cfg)
            .unwrap()
            .value;
        assert!((v - 2.0 * PI / (3.0 * 3f64.sqrt())).abs() < 1e-14);
        assert!(v > HALF_COS_UPPER);
    }

    #[test]
    fn guards() {
        assert!(!lower_factor_guard(0.9));
        assert!(lower_factor_guard((2.0f64 / 3.0).sqrt() - 1e-12));
        assert!(third_kind_reversed_guard(0.8, 0.2));
        assert!(!third_kind_guard(0.8, 0.2));
        assert!(third_kind_guard(0.5, -0.5));
        // t² = 0.25 → threshold 0.25/1.25 = 0.2
        assert!(third_kind_guard(0.5, 0.21) && !third_kind_guard(0.5, 0.19));
        assert!(product_reversed_guard(0.5, 0.21));
        // no large-h branch once t² ≥ 2/3
        assert!(!third_kind_guard(0.9, 100.0) && !product_reversed_guard(0.9, 100.0));
        assert!(product_guard(0.6, -0.3) && !product_guard(0.6, 0.2));
    }

    #[test]
    fn product_fixture() {
        let t = Modulus::new(0.6).unwrap();
        let cfg = QuadratureConfig::default();
        let p = pi_quad(t, -0.3, &cfg).unwrap().value;
        assert!((p - 2.113_415_440_506_059_777).abs() < 1e-14);
        assert!(p * e_agm(t).unwrap().value > product_bound(-0.3));
        assert_eq!(product_bound(-0.3), PI * PI / (4.0 * 0.7f64.sqrt()));
    }
}
