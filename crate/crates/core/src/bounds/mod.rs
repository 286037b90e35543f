//! Closed-form enclosures of the complete elliptic integrals.
//!
//! Every bound is a total function returning an [`Interval`] (or a
//! center/radius pair for the trapezoid-type bounds). Intervals are closed
//! even where the underlying inequality is strict; strictness is a property
//! checked by the verification harness, not by the type.

pub mod amm;
mod perimeter;
mod pointwise;
pub mod tchebycheff;
mod trapezoid;

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::reference::{Axes, Modulus};

pub use perimeter::{perimeter_bounds, PerimeterBounds};
pub use pointwise::quadratic_sandwich;
pub use trapezoid::{
    acdq_radius, e_slope, f_slope, trapezoid_e, trapezoid_f, AcdqInput, AcdqRadius, TrapezoidBound,
};

/// Below this modulus both endpoints of [`e_log_bounds`] round to `π/2`.
const SMALL_MODULUS: f64 = 1e-8;

/// Logarithmic enclosure of `E(t)`:
///
/// ```text
/// π/2 − ½ ln((1+t)^{1+t} (1−t)^{1−t})  ≤  E(t)  ≤  (π−1)/2 + (1−t²)/(4t) · ln((1+t)/(1−t))
/// ```
///
/// Both sides come from bounding `C(2i,i)` inside the power series of `E`
/// and summing the resulting series in closed form. The lower side is
/// `π/2 − 2X` with `X = ¼ Σ t^{2i}/(i(2i−1)) = (t/4) ln((1+t)/(1−t)) + ¼ ln(1−t²)`;
/// it behaves like `π/2 − t²/2` near zero. See [`e_log_lower_quotient_form`] for the weaker
/// variant written with a quotient inside the logarithm.
///
/// The logarithms are expanded into `ln_1p` terms, so neither end loses
/// precision as `t → 0`.
pub fn e_log_bounds(t: Modulus) -> Interval {
    let t = t.get();
    if t < SMALL_MODULUS {
        return Interval::point(FRAC_PI_2);
    }
    let lo = FRAC_PI_2 - 0.5 * ((1.0 + t) * t.ln_1p() + (1.0 - t) * (-t).ln_1p());
    // ((1−t²)/(4t)) ln((1+t)/(1−t)) = (1−t²) atanh(t) / (2t)
    let hi = 0.5 * (PI - 1.0) + (1.0 - t) * (1.0 + t) * t.atanh() / (2.0 * t);
    Interval::ordered(lo, hi)
}

/// `π/2 − ½ ln((1+t)^{1−t} / (1−t)^{1+t})`.
///
/// Also a lower bound for `E(t)`, below [`e_log_bounds`] by `−ln(1−t) − t ln(1+t)`,
/// so it only approaches `π/2` linearly as `t → 0`.
pub fn e_log_lower_quotient_form(t: Modulus) -> f64 {
    let t = t.get();
    FRAC_PI_2 - 0.5 * ((1.0 - t) * t.ln_1p() - (1.0 + t) * (-t).ln_1p())
}

/// Enclosure of `F(a, b)` for `b > a > 0`:
///
/// ```text
/// (π/2) ln(√(b/a) + √(b/a − 1)) / √(b(b−a))  ≤  F(a, b)  ≤  (π/2) arctan √(b/a − 1) / √(a(b−a))
/// ```
///
/// Only the literal hypothesis `b > a` is accepted. `F` is symmetric in its
/// arguments, so callers holding `a > b` can pass [`Axes::swapped`].
pub fn f_ab_bounds(ax: Axes) -> Result<Interval> {
    let (a, b) = (ax.a(), ax.b());
    if !(b > a) {
        return Err(Error::Domain(format!(
            "this enclosure needs b > a, got a = {a}, b = {b}"
        )));
    }
    let gap = b - a;
    let root = (gap / a).sqrt();
    // ln(√r + √(r−1)) = asinh(√(r−1))
    let lo = FRAC_PI_2 * root.asinh() / (b * gap).sqrt();
    let hi = FRAC_PI_2 * root.atan() / (a * gap).sqrt();
    Ok(Interval::ordered(lo, hi))
}

/// The same enclosure in its intermediate form, for
/// `∫₀^{π/2} dθ / √(1 + t² cos²θ)` with `t > 0`:
///
/// ```text
/// (π/2) ln(⁴√(1+t²) + √(√(1+t²) − 1)) / √(1 + t² − √(1+t²))
///     ≤ ∫ ≤ (π/2) arctan √(√(1+t²) − 1) / √(√(1+t²) − 1)
/// ```
pub fn cos_form_bounds(t: f64) -> Result<Interval> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("need t > 0, got {t}")));
    }
    let root = 1f64.hypot(t);
    let excess = t * t / (root + 1.0); // √(1+t²) − 1
    let lo = FRAC_PI_2 * (root.sqrt() + excess.sqrt()).ln() / (root * excess).sqrt();
    let hi = FRAC_PI_2 * excess.sqrt().atan() / excess.sqrt();
    Ok(Interval::ordered(lo, hi))
}
