//! Reference values for the complete elliptic integrals.
//!
//! Two independent routes are provided for `E(t)` and `F(t)`: the AGM
//! iteration and adaptive Gauss–Kronrod quadrature of the defining integrals.
//! Each is used as the other's oracle in the test suite.
//!
//! Notation: `E(t) = ∫₀^{π/2} √(1 − t² sin²θ) dθ` and
//! `F(t) = ∫₀^{π/2} (1 − t² sin²θ)^{−1/2} dθ`, so `F` is the integral of the
//! first kind and `E` the one of the second kind.

mod agm;
mod quad;
mod series;

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use agm::{e_ab, e_agm, f_ab, f_agm};
pub use quad::QuadratureConfig;
pub use series::e_series;

/// Elliptic modulus `t`, strictly inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(t: f64) -> Result<Self> {
        if t > 0.0 && t < 1.0 {
            Ok(Self(t))
        } else {
            Err(Error::InvalidModulus(t))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `√(1 − t²)`, evaluated as `√((1 − t)(1 + t))`.
    pub fn complement(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

impl TryFrom<f64> for Modulus {
    type Error = Error;

    fn try_from(t: f64) -> Result<Self> {
        Self::new(t)
    }
}

/// A pair of strictly positive semi-axes `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axes {
    a: f64,
    b: f64,
}

impl Axes {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
            Ok(Self { a, b })
        } else {
            Err(Error::InvalidAxes { a, b })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Agm,
    Quadrature,
    Series,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Agm => "agm",
            Method::Quadrature => "quadrature",
            Method::Series => "series",
        })
    }
}

/// A reference value together with the evaluator's own error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub est_error: f64,
    pub method: Method,
}

/// Values at the closed ends of the modulus range, which [`Modulus`] excludes.
pub mod limits {
    use std::f64::consts::FRAC_PI_2;

    /// `lim_{t→0⁺} E(t)`.
    pub const E_AT_ZERO: f64 = FRAC_PI_2;
    /// `lim_{t→1⁻} E(t)`.
    pub const E_AT_ONE: f64 = 1.0;
    /// `lim_{t→0⁺} F(t)`.
    pub const F_AT_ZERO: f64 = FRAC_PI_2;
    /// `F(t)` diverges logarithmically as `t → 1⁻`.
    pub const F_AT_ONE: f64 = f64::INFINITY;
}

/// Quadrature of `E(t)`. The integrand is written `√(cos²θ + (1 − t²) sin²θ)`
/// so nothing cancels as `t → 1`.
pub fn e_quad(t: Modulus, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let tc2 = (1.0 - t.get()) * (1.0 + t.get());
    let q = quad::integrate(
        |x: f64| {
            let (s, c) = x.sin_cos();
            (c * c + tc2 * s * s).sqrt()
        },
        0.0,
        FRAC_PI_2,
        cfg,
    )?;
    Ok(quadrature_result(q))
}

/// Quadrature of `F(t)`.
pub fn f_quad(t: Modulus, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let tc2 = (1.0 - t.get()) * (1.0 + t.get());
    let q = quad::integrate(
        |x: f64| {
            let (s, c) = x.sin_cos();
            (c * c + tc2 * s * s).sqrt().recip()
        },
        0.0,
        FRAC_PI_2,
        cfg,
    )?;
    Ok(quadrature_result(q))
}

/// Complete integral of the third kind,
/// `Π(t, h) = ∫₀^{π/2} dθ / ((1 + h sin²θ) √(1 − t² sin²θ))`, for `h > −1`.
pub fn pi_quad(t: Modulus, h: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    if !(h > -1.0) || !h.is_finite() {
        return Err(Error::Domain(format!(
            "the third-kind characteristic must satisfy h > -1, got h = {h}"
        )));
    }
    let tc2 = (1.0 - t.get()) * (1.0 + t.get());
    let q = quad::integrate(
        |x: f64| {
            let (s, c) = x.sin_cos();
            let s2 = s * s;
            ((1.0 + h * s2) * (c * c + tc2 * s2).sqrt()).recip()
        },
        0.0,
        FRAC_PI_2,
        cfg,
    )?;
    Ok(quadrature_result(q))
}

/// Adaptive quadrature of an arbitrary integrand over `[lo, hi]`.
///
/// The endpoints themselves are never sampled, so integrable endpoint
/// singularities are handled by refinement alone. A singularity that is not
/// integrable is reported as [`Error::Divergent`].
pub fn integrate<F>(f: F, lo: f64, hi: f64, cfg: &QuadratureConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    quad::integrate(f, lo, hi, cfg).map(quadrature_result)
}

fn quadrature_result(q: quad::Quadrature) -> EvalResult {
    EvalResult {
        value: q.value,
        est_error: q.est_error,
        method: Method::Quadrature,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad_e(t: f64) -> f64 {
        e_quad(Modulus::new(t).unwrap(), &QuadratureConfig::default())
            .unwrap()
            .value
    }

    fn quad_f(t: f64) -> f64 {
        f_quad(Modulus::new(t).unwrap(), &QuadratureConfig::default())
            .unwrap()
            .value
    }

    #[test]
    fn modulus_rejects_closed_endpoints() {
        for t in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(Modulus::new(t).is_err(), "{t}");
        }
        let msg = Modulus::new(0.0).unwrap_err().to_string();
        assert!(msg.contains("(0, 1)") && msg.contains("π/2"), "{msg}");
        assert!(Modulus::new(f64::MIN_POSITIVE).is_ok());
        assert!(Modulus::new(1.0 - f64::EPSILON / 2.0).is_ok());
    }

    #[test]
    fn axes_validation() {
        assert!(Axes::new(0.0, 1.0).is_err());
        assert!(Axes::new(1.0, -1.0).is_err());
        assert!(Axes::new(1.0, f64::INFINITY).is_err());
        let ax = Axes::new(1.0, 2.0).unwrap().swapped();
        assert_eq!((ax.a(), ax.b()), (2.0, 1.0));
    }

    #[test]
    fn quadrature_small_modulus_tends_to_quarter_circle() {
        assert!((quad_e(1e-9) - FRAC_PI_2).abs() < 1e-15);
        assert!((quad_f(1e-9) - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn quadrature_orders_second_below_first_kind() {
        let (e, f) = (quad_e(0.5), quad_f(0.5));
        assert!(e.is_finite() && f.is_finite());
        assert!(e < FRAC_PI_2 && FRAC_PI_2 < f);
    }

    #[test]
    fn quadrature_error_estimate_honours_tolerance() {
        let cfg = QuadratureConfig::new(1e-12, 1e-12, 40).unwrap();
        for t in [0.1, 0.9, 0.9999] {
            let r = f_quad(Modulus::new(t).unwrap(), &cfg).unwrap();
            assert!(r.est_error <= 1e-12_f64.max(1e-12 * r.value));
            assert_eq!(r.method, Method::Quadrature);
        }
    }

    #[test]
    fn third_kind_reduces_to_first_kind_at_zero_characteristic() {
        let cfg = QuadratureConfig::default();
        for t in [0.1, 0.5, 0.99] {
            let m = Modulus::new(t).unwrap();
            let p = pi_quad(m, 0.0, &cfg).unwrap().value;
            assert_eq!(p, f_quad(m, &cfg).unwrap().value);
        }
    }

    #[test]
    fn third_kind_domain() {
        let m = Modulus::new(0.5).unwrap();
        let cfg = QuadratureConfig::default();
        assert!(matches!(pi_quad(m, -1.0, &cfg), Err(Error::Domain(_))));
        assert!(matches!(pi_quad(m, -2.0, &cfg), Err(Error::Domain(_))));
        let p = pi_quad(m, 1.0, &cfg).unwrap().value;
        assert!(p.is_finite() && p < quad_f(0.5));
        assert!(pi_quad(m, -0.999, &cfg).unwrap().value > quad_f(0.5));
    }

    #[test]
    fn generic_quadrature() {
        let cfg = QuadratureConfig::default();
        let r = integrate(|_| 1.0, 0.0, FRAC_PI_2, &cfg).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-15);
    }
}
