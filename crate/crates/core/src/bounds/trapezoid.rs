//! Trapezoid-rule error bounds driven by the range of the derivative, and
//! their instantiation for the two elliptic integrands on `[0, π/2]`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::reference::Modulus;

/// Data for the trapezoid bound on `[a, b]`: endpoint values and
/// derivative bounds `m ≤ f′ ≤ M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcdqInput {
    a: f64,
    b: f64,
    f_a: f64,
    f_b: f64,
    rise: f64,
    m: f64,
    big_m: f64,
}

impl AcdqInput {
    pub fn new(a: f64, b: f64, f_a: f64, f_b: f64, m: f64, big_m: f64) -> Result<Self> {
        let input = Self {
            a,
            b,
            f_a,
            f_b,
            rise: f_b - f_a,
            m,
            big_m,
        };
        input.validate()?;
        Ok(input)
    }

    /// Replaces `f(b) − f(a)` by a value the caller computed without
    /// cancellation. It must agree with the plain difference to rounding.
    pub fn with_rise(mut self, rise: f64) -> Result<Self> {
        let scale = self.f_a.abs().max(self.f_b.abs());
        if (rise - (self.f_b - self.f_a)).abs() > 8.0 * f64::EPSILON * scale {
            return Err(Error::Domain(format!(
                "rise {rise} disagrees with f(b) − f(a) = {}",
                self.f_b - self.f_a
            )));
        }
        self.rise = rise;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.a, self.b, self.f_a, self.f_b, self.m, self.big_m]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::Domain(
                "trapezoid bound inputs must be finite".into(),
            ));
        }
        if !(self.a < self.b) {
            return Err(Error::Domain(format!(
                "need a < b, got [{}, {}]",
                self.a, self.b
            )));
        }
        if self.m > self.big_m {
            return Err(Error::Domain(format!(
                "need m ≤ M, got m = {}, M = {}",
                self.m, self.big_m
            )));
        }
        let s0 = self.secant();
        let slack = 8.0 * f64::EPSILON * s0.abs().max(self.m.abs()).max(self.big_m.abs());
        if s0 < self.m - slack || s0 > self.big_m + slack {
            return Err(Error::Domain(format!(
                "secant slope {s0} lies outside the derivative range [{}, {}]",
                self.m, self.big_m
            )));
        }
        Ok(())
    }

    /// `S₀ = (f(b) − f(a)) / (b − a)`.
    pub fn secant(&self) -> f64 {
        self.rise / (self.b - self.a)
    }

    /// `(f(a) + f(b)) / 2`.
    pub fn endpoint_mean(&self) -> f64 {
        0.5 * (self.f_a + self.f_b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcdqRadius {
    pub radius: f64,
    /// `M = m`: the derivative is constant, `f` is affine and the trapezoid
    /// rule is exact.
    pub degenerate: bool,
}

/// `|(1/(b−a))∫ₐᵇ f − (f(a)+f(b))/2| ≤ (M − S₀)(S₀ − m)(b − a) / (2(M − m))`.
///
/// The error of the trapezoid rule for the integral itself is at most
/// `(M − S₀)(S₀ − m)(b − a)² / (2(M − m))`; dividing by `b − a` leaves one
/// power of the length behind, which the bound on the mean must keep.
pub fn acdq_radius(input: &AcdqInput) -> AcdqRadius {
    let range = input.big_m - input.m;
    if range == 0.0 {
        return AcdqRadius {
            radius: 0.0,
            degenerate: true,
        };
    }
    let s0 = input.secant().clamp(input.m, input.big_m);
    AcdqRadius {
        radius: (input.big_m - s0) * (s0 - input.m) * (input.b - input.a) / (2.0 * range),
        degenerate: false,
    }
}

/// `|(2/π)·I − center| ≤ radius` for one of the elliptic integrals `I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidBound {
    pub center: f64,
    /// `(π/2) · printed_radius`.
    pub radius: f64,
    /// The closed form without the interval length `π/2`. It is what the
    /// derivative-range bound gives when that factor is dropped, and it fails
    /// to enclose the integral as `t → 1`.
    pub printed_radius: f64,
    /// Radius assembled through [`acdq_radius`]; agrees with `radius`.
    pub composed_radius: f64,
    /// Angle where the integrand's derivative attains the extremum used.
    pub critical_angle: f64,
    /// That extremum: the minimum of the slope for `E`, the maximum for `F`.
    pub critical_slope: f64,
}

impl TrapezoidBound {
    pub fn lo(&self) -> f64 {
        self.center - self.radius
    }

    pub fn hi(&self) -> f64 {
        self.center + self.radius
    }
}

/// `d/dθ √(1 − t² sin²θ)`.
pub fn e_slope(t: Modulus, theta: f64) -> f64 {
    let t2 = t.get() * t.get();
    let (s, c) = theta.sin_cos();
    -t2 * s * c / (1.0 - t2 * s * s).sqrt()
}

/// `d/dθ (1 − t² sin²θ)^{−1/2}`.
pub fn f_slope(t: Modulus, theta: f64) -> f64 {
    let t2 = t.get() * t.get();
    let (s, c) = theta.sin_cos();
    t2 * s * c / (1.0 - t2 * s * s).powf(1.5)
}

// Cancellation-free pieces shared by both bounds.
struct Pieces {
    t2: f64,
    /// √(1 − t²)
    s: f64,
    /// 1 − √(1 − t²)
    one_minus_s: f64,
}

impl Pieces {
    fn new(t: Modulus) -> Self {
        let t2 = t.get() * t.get();
        let s = t.complement();
        Self {
            t2,
            s,
            one_minus_s: t2 / (1.0 + s),
        }
    }
}

/// Trapezoid bound for `(2/π)E(t)`:
///
/// ```text
/// |(2/π)E(t) − (1 + √(1−t²))/2|
///     ≤ (1/2)(1 − √(1−t²)) [1 − (2/π) √((1−t²+√(1−t²))(1+√(1−t²))) / ((√(1−t²)+1) ⁴√(1−t²))]
/// ```
///
/// The slope of `√(1 − t² sin²θ)` is `≤ 0` with a unique minimum at
/// `θ = arctan(1/⁴√(1−t²))`. The radius is evaluated from the closed form and
/// separately composed from [`acdq_radius`]; both are returned, along with
/// the `1/π` variant in [`TrapezoidBound::printed_radius`].
pub fn trapezoid_e(t: Modulus) -> TrapezoidBound {
    let Pieces { t2, s, one_minus_s } = Pieces::new(t);
    let quarter = s.sqrt(); // ⁴√(1−t²)
    let nested = ((s * s + s) * (1.0 + s)).sqrt();

    let printed_radius = one_minus_s / PI * (1.0 - 2.0 / PI * nested / ((s + 1.0) * quarter));

    let critical_slope = -t2 * quarter / nested;
    let critical_angle = quarter.recip().atan();
    let composed = AcdqInput::new(0.0, FRAC_PI_2, 1.0, s, critical_slope, 0.0)
        .and_then(|i| i.with_rise(-one_minus_s))
        .map(|i| acdq_radius(&i).radius)
        .unwrap_or(f64::NAN);

    TrapezoidBound {
        center: 0.5 * (1.0 + s),
        radius: FRAC_PI_2 * printed_radius,
        printed_radius,
        composed_radius: composed,
        critical_angle,
        critical_slope,
    }
}

/// Trapezoid bound for `(2/π)F(t)`:
///
/// ```text
/// |(2/π)F(t) − (√(1−t²)+1)/(2√(1−t²))|
///     ≤ (1/2)(1 − √(1−t²))/√(1−t²)
///       × [1 − (2/π)(1 − √(1−t²))(2 − t² − w)^{3/2} / √((1−t²)(w + t² − 1)(1 − w))]
/// ```
///
/// with `w = √(t⁴ − t² + 1)`. The slope of `(1 − t² sin²θ)^{−1/2}` is `≥ 0`
/// with a unique maximum at `θ = arcsin(√(w + t² − 1)/t)`.
pub fn trapezoid_f(t: Modulus) -> TrapezoidBound {
    let Pieces { t2, s, one_minus_s } = Pieces::new(t);
    let w = (t2 * t2 - t2 + 1.0).sqrt();
    let one_minus_w = t2 * s * s / (1.0 + w);
    let w_shift = t2 * (w + t2) / (1.0 + w); // w + t² − 1
    let two_minus = one_minus_w + s * s; // 2 − t² − w

    let printed_radius = one_minus_s / (PI * s)
        * (1.0
            - 2.0 / PI * one_minus_s * two_minus.powf(1.5)
                / (s * s * w_shift * one_minus_w).sqrt());

    let critical_slope = (w_shift * one_minus_w).sqrt() / two_minus.powf(1.5);
    let critical_angle = (w_shift.sqrt() / t.get()).min(1.0).asin();
    let composed = AcdqInput::new(0.0, FRAC_PI_2, 1.0, s.recip(), 0.0, critical_slope)
        .and_then(|i| i.with_rise(one_minus_s / s))
        .map(|i| acdq_radius(&i).radius)
        .unwrap_or(f64::NAN);

    TrapezoidBound {
        center: (s + 1.0) / (2.0 * s),
        radius: FRAC_PI_2 * printed_radius,
        printed_radius,
        composed_radius: composed,
        critical_angle,
        critical_slope,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{e_agm, f_agm};

    fn m(t: f64) -> Modulus {
        Modulus::new(t).unwrap()
    }

    #[test]
    fn affine_function_is_degenerate() {
        let input = AcdqInput::new(0.0, 2.0, 1.0, 5.0, 2.0, 2.0).unwrap();
        assert_eq!(
            acdq_radius(&input),
            AcdqRadius {
                radius: 0.0,
                degenerate: true
            }
        );
    }

    #[test]
    fn sine_on_quarter_period() {
        let input = AcdqInput::new(0.0, FRAC_PI_2, 0.0, 1.0, 0.0, 1.0).unwrap();
        let r = acdq_radius(&input).radius;
        let s0 = 2.0 / PI;
        assert!((r - FRAC_PI_2 * s0 * (1.0 - s0) / 2.0).abs() < 1e-16);
        // mean of sin is 2/π exactly; without the length factor the radius
        // would be 0.1157 < 0.1366
        assert!((2.0 / PI - 0.5).abs() <= r);
        assert!((2.0 / PI - 0.5).abs() > r / FRAC_PI_2);
    }

    #[test]
    fn square_on_unit_interval() {
        let input = AcdqInput::new(0.0, 1.0, 0.0, 1.0, 0.0, 2.0).unwrap();
        assert_eq!(acdq_radius(&input).radius, 0.25);
        assert!((1.0_f64 / 3.0 - 0.5).abs() <= 0.25);
    }

    #[test]
    fn input_validation() {
        assert!(AcdqInput::new(1.0, 0.0, 0.0, 1.0, 0.0, 2.0).is_err());
        assert!(AcdqInput::new(0.0, 1.0, 0.0, 1.0, 2.0, 0.0).is_err());
        // secant slope 3 outside [0, 2]
        assert!(AcdqInput::new(0.0, 1.0, 0.0, 3.0, 0.0, 2.0).is_err());
        assert!(AcdqInput::new(0.0, 1.0, 0.0, f64::NAN, 0.0, 2.0).is_err());
        let ok = AcdqInput::new(0.0, 1.0, 0.0, 1.0, 0.0, 2.0).unwrap();
        assert!(ok.with_rise(1.5).is_err());
        assert_eq!(ok.endpoint_mean(), 0.5);
    }

    #[test]
    fn e_bound_vanishes_at_small_modulus() {
        let b = trapezoid_e(m(1e-9));
        assert!((b.center - 1.0).abs() < 1e-16);
        assert!(b.radius < 1e-17);
    }

    #[test]
    fn f_bound_vanishes_at_small_modulus() {
        let b = trapezoid_f(m(1e-6));
        assert!((b.center - 1.0).abs() < 1e-11);
        assert!(b.radius < 1e-12);
    }

    #[test]
    fn e_bound_contains_agm_value() {
        for t in [0.5, 0.9, 0.999, 0.999_999] {
            let b = trapezoid_e(m(t));
            let v = 2.0 / PI * e_agm(m(t)).unwrap().value;
            assert!((v - b.center).abs() <= b.radius, "t = {t}");
        }
    }

    #[test]
    fn f_bound_contains_agm_value() {
        for t in [0.5, 0.9, 0.999, 0.999_999] {
            let b = trapezoid_f(m(t));
            let v = 2.0 / PI * f_agm(m(t)).unwrap().value;
            assert!((v - b.center).abs() <= b.radius, "t = {t}");
        }
    }

    #[test]
    fn printed_radii_fail_near_one() {
        let v = 2.0 / PI * e_agm(m(0.999_9)).unwrap().value;
        let b = trapezoid_e(m(0.999_9));
        assert!((v - b.center).abs() > b.printed_radius);
        let v = 2.0 / PI * f_agm(m(0.99)).unwrap().value;
        let b = trapezoid_f(m(0.99));
        assert!((v - b.center).abs() > b.printed_radius);
    }

    #[test]
    fn composed_radius_matches_closed_form() {
        for k in 1..1000 {
            let t = f64::from(k) / 1000.0;
            for b in [trapezoid_e(m(t)), trapezoid_f(m(t))] {
                let rel = (b.radius - b.composed_radius).abs() / b.radius;
                assert!(
                    rel <= 1e-14,
                    "t = {t}: {} vs {}",
                    b.radius,
                    b.composed_radius
                );
            }
        }
    }

    // Radii typed straight from the displayed formulas, no rearrangement.
    fn naive_e_radius(t: f64) -> f64 {
        let r = (1.0 - t * t).sqrt();
        1.0 / PI
            * (1.0 - r)
            * (1.0
                - 2.0 / PI * ((1.0 - t * t + r) * (1.0 + r)).sqrt()
                    / ((r + 1.0) * (1.0 - t * t).powf(0.25)))
    }

    fn naive_f_radius(t: f64) -> f64 {
        let r = (1.0 - t * t).sqrt();
        let w = (t.powi(4) - t * t + 1.0).sqrt();
        1.0 / PI * (1.0 - r) / r
            * (1.0
                - 2.0 / PI * (1.0 - r) * (2.0 - t * t - w).powf(1.5)
                    / ((1.0 - t * t) * (w + t * t - 1.0) * (1.0 - w)).sqrt())
    }

    #[test]
    fn radii_agree_with_naive_transcription() {
        for t in [0.2, 0.4, 0.6, 0.8, 0.95] {
            let (e, f) = (trapezoid_e(m(t)), trapezoid_f(m(t)));
            let (pe, pf) = (e.printed_radius, f.printed_radius);
            assert!((pe - naive_e_radius(t)).abs() <= 1e-12 * pe, "t = {t}");
            assert!((pf - naive_f_radius(t)).abs() <= 1e-12 * pf, "t = {t}");
        }
    }

    #[test]
    fn critical_angles_are_stationary() {
        // the slope's own derivative changes sign across the critical angle
        for t in [0.3, 0.7, 0.9] {
            let h = 1e-5;
            let e = trapezoid_e(m(t));
            let d = |th: f64| (e_slope(m(t), th + h) - e_slope(m(t), th - h)) / (2.0 * h);
            assert!(d(e.critical_angle - 1e-3) < 0.0 && d(e.critical_angle + 1e-3) > 0.0);
            assert!((e_slope(m(t), e.critical_angle) - e.critical_slope).abs() < 1e-15);

            let f = trapezoid_f(m(t));
            let d = |th: f64| (f_slope(m(t), th + h) - f_slope(m(t), th - h)) / (2.0 * h);
            assert!(d(f.critical_angle - 1e-3) > 0.0 && d(f.critical_angle + 1e-3) < 0.0);
            assert!((f_slope(m(t), f.critical_angle) - f.critical_slope).abs() < 1e-14);
        }
    }

    #[test]
    fn f_maximum_matches_dense_grid() {
        let t = m(0.5);
        let n = 1_000_000;
        let grid_max = (0..=n)
            .map(|k| f_slope(t, FRAC_PI_2 * f64::from(k) / f64::from(n)))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((trapezoid_f(t).critical_slope - grid_max).abs() < 1e-8);
    }
}
