use std::f64::consts::FRAC_PI_2;

use super::{Axes, EvalResult, Method, Modulus};
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 64;
const GAP_FACTOR: f64 = 4.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy)]
struct AgmRun {
    /// Final arithmetic mean.
    mean: f64,
    /// Final relative gap `|a_n − b_n| / a_n`.
    rel_gap: f64,
    /// `Σ_{n≥0} 2^{n−1} c_n²`.
    weighted_sum: f64,
}

/// Runs `a ← (a+b)/2, b ← √(ab)` from `(1, tc)` with `c_0 = t`, `tc = √(1 − t²)`.
///
/// `c_{n+1} = (a_n − b_n)/2` is carried as `c_n² / (4 a_{n+1})`, which avoids
/// subtracting nearly equal means.
fn agm(t: f64, tc: f64) -> Result<AgmRun> {
    let (mut a, mut b, mut c) = (1.0_f64, tc, t);
    let mut weight = 0.5;
    let mut weighted_sum = weight * c * c;
    let mut iterations = 0;
    while (a - b).abs() > GAP_FACTOR * a {
        if iterations == MAX_ITERATIONS {
            return Err(Error::NonConvergence { iterations });
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        c = c * c / (4.0 * next);
        a = next;
        weight *= 2.0;
        weighted_sum += weight * c * c;
        iterations += 1;
    }
    Ok(AgmRun {
        mean: a,
        rel_gap: (a - b).abs() / a,
        weighted_sum,
    })
}

fn first_kind(run: &AgmRun) -> (f64, f64) {
    let value = FRAC_PI_2 / run.mean;
    (value, value * (0.5 * run.rel_gap + 8.0 * f64::EPSILON))
}

fn second_kind(run: &AgmRun) -> (f64, f64) {
    let (f, f_err) = first_kind(run);
    let factor = 1.0 - run.weighted_sum;
    let value = f * factor;
    (value, f_err * factor + 16.0 * f64::EPSILON * f)
}

fn agm_result((value, est_error): (f64, f64)) -> EvalResult {
    EvalResult {
        value,
        est_error,
        method: Method::Agm,
    }
}

/// `F(t) = π / (2 AGM(1, √(1 − t²)))`.
pub fn f_agm(t: Modulus) -> Result<EvalResult> {
    agm(t.get(), t.complement()).map(|r| agm_result(first_kind(&r)))
}

/// `E(t) = F(t) (1 − Σ_{n≥0} 2^{n−1} c_n²)`.
pub fn e_agm(t: Modulus) -> Result<EvalResult> {
    agm(t.get(), t.complement()).map(|r| agm_result(second_kind(&r)))
}

/// Reduces `(a, b)` to `(major, ratio)` with `ratio = minor / major ∈ (0, 1]`.
fn normalise(ax: Axes) -> (f64, f64) {
    let (major, minor) = if ax.a() >= ax.b() {
        (ax.a(), ax.b())
    } else {
        (ax.b(), ax.a())
    };
    (major, minor / major)
}

/// `E(a, b) = ∫₀^{π/2} √(a² cos²θ + b² sin²θ) dθ`.
///
/// For `a > b` this is `a·E(√(1 − b²/a²))`; the integral is symmetric in
/// `(a, b)`, so `b > a` swaps first. Equal axes give `(π/2)·a` exactly.
pub fn e_ab(ax: Axes) -> Result<EvalResult> {
    let (major, ratio) = normalise(ax);
    if ratio == 1.0 {
        return Ok(agm_result((FRAC_PI_2 * major, 0.0)));
    }
    let t = ((1.0 - ratio) * (1.0 + ratio)).sqrt();
    let (value, err) = second_kind(&agm(t, ratio)?);
    Ok(agm_result((major * value, major * err)))
}

/// `F(a, b) = ∫₀^{π/2} (a² cos²θ + b² sin²θ)^{−1/2} dθ`, reduced like [`e_ab`].
pub fn f_ab(ax: Axes) -> Result<EvalResult> {
    let (major, ratio) = normalise(ax);
    if ratio == 1.0 {
        return Ok(agm_result((FRAC_PI_2 / major, 0.0)));
    }
    let t = ((1.0 - ratio) * (1.0 + ratio)).sqrt();
    let (value, err) = first_kind(&agm(t, ratio)?);
    Ok(agm_result((value / major, err / major)))
}
