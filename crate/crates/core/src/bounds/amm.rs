//! Bounds for `∫₀¹ dx / √(4 − x² − x³)`.
//!
//! The crude enclosure `(π/6, π√2/8)` follows from `4 − x² > 4 − x² − x³ >
//! 4 − 2x²`. Polynomial minorants and majorants of the integrand, integrated
//! exactly, sharpen it to the constants below.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::reference::{self, EvalResult, QuadratureConfig};

/// `π/6`, from `4 − x² − x³ < 4 − x²`.
pub const POSED_LOWER: f64 = PI / 6.0;
/// `π√2/8`, from `4 − x² − x³ > 4 − 2x²`.
pub const POSED_UPPER: f64 = PI * SQRT_2 / 8.0;
/// `3/10 + 27√2/160`, the integral of [`quartic_lower`].
pub const LOWER_B1: f64 = 0.3 + 27.0 * SQRT_2 / 160.0;
/// `1/4 + 19√2/96`, the integral of [`quadratic_lower`].
pub const LOWER_B2: f64 = 0.25 + 19.0 * SQRT_2 / 96.0;
/// `1/5 + 19√2/80`, the integral of [`quartic_lower_alt`].
pub const LOWER_B3: f64 = 0.2 + 19.0 * SQRT_2 / 80.0;
/// `79/192 + √2/10`, the integral of [`cubic_upper`].
pub const IMPROVED_UPPER: f64 = 79.0 / 192.0 + SQRT_2 / 10.0;

/// `(4 − x² − x³)^{−1/2}`.
pub fn integrand(x: f64) -> f64 {
    (4.0 - x * x * (1.0 + x)).sqrt().recip()
}

/// `1/2 + (√2−1)/2 · x⁴ + (11√2/8 − 2)(1 − x) x³`.
pub fn quartic_lower(x: f64) -> f64 {
    0.5 + 0.5 * (SQRT_2 - 1.0) * x.powi(4) + (11.0 * SQRT_2 / 8.0 - 2.0) * (1.0 - x) * x.powi(3)
}

/// `1/2 + (√2−1)/2 · x² + (3√2/8 − 1)(1 − x) x²`.
pub fn quadratic_lower(x: f64) -> f64 {
    0.5 + 0.5 * (SQRT_2 - 1.0) * x * x + (3.0 * SQRT_2 / 8.0 - 1.0) * (1.0 - x) * x * x
}

/// `1/2 + (√2−1)/2 · x⁴ + (2/3 − 11√2/24)(x³ − 1) x`.
pub fn quartic_lower_alt(x: f64) -> f64 {
    0.5 + 0.5 * (SQRT_2 - 1.0) * x.powi(4)
        + (2.0 / 3.0 - 11.0 * SQRT_2 / 24.0) * (x.powi(3) - 1.0) * x
}

/// `1/2 + (√2−1)/2 · x² + (5 − 4√2)/8 · x²(1 − x)((8√2 − 9)/(8√2 − 10) + x)`.
pub fn cubic_upper(x: f64) -> f64 {
    let shift = (8.0 * SQRT_2 - 9.0) / (8.0 * SQRT_2 - 10.0);
    0.5 + 0.5 * (SQRT_2 - 1.0) * x * x
        + (5.0 - 4.0 * SQRT_2) / 8.0 * x * x * (1.0 - x) * (shift + x)
}

/// `(quartic_lower(x), integrand(x), cubic_upper(x))`, ordered for `x ∈ [0, 1]`.
pub fn pointwise(x: f64) -> Result<(f64, f64, f64)> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("need x ∈ [0, 1], got {x}")));
    }
    Ok((quartic_lower(x), integrand(x), cubic_upper(x)))
}

/// Adaptive quadrature of the integral itself.
pub fn integral(cfg: &QuadratureConfig) -> Result<EvalResult> {
    reference::integrate(integrand, 0.0, 1.0, cfg)
}
