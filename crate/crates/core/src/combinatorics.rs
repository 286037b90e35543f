//! Wallis integrals, central binomial coefficients and the series
//! `Σ s^{2i}/(i + 1/2)` that the elliptic bounds are built from.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Largest `i` for which [`central_binom_bounds`] works in linear space.
/// `4^i` overflows binary64 just past `i = 511`.
pub const LINEAR_BINOM_LIMIT: u64 = 500;

/// `∫₀^{π/2} sinⁿx dx`.
///
/// Equals `(π/2)(n−1)!!/n!!` for even `n` and `(n−1)!!/n!!` for odd `n`. The
/// double-factorial ratio is accumulated as `Π (k−1)/k` over
/// `k = n, n−2, …, ≥ 2`, so nothing overflows.
pub fn wallis_integral(n: u64) -> f64 {
    let mut ratio = 1.0;
    let mut k = n;
    while k >= 2 {
        let kf = k as f64;
        ratio *= (kf - 1.0) / kf;
        k -= 2;
    }
    if n % 2 == 0 {
        FRAC_PI_2 * ratio
    } else {
        ratio
    }
}

/// `C(2i, i) / 4^i`, accumulated as `Π_{k=1}^{i} (2k−1)/(2k)`.
pub fn central_binom_ratio(i: u64) -> f64 {
    (1..=i).fold(1.0, |acc, k| {
        let k = k as f64;
        acc * (2.0 * k - 1.0) / (2.0 * k)
    })
}

/// `C(2i, i)` as a float; exact for `i ≤ 33`, correctly scaled up to `i ≈ 511`.
pub fn central_binom(i: u64) -> f64 {
    central_binom_ratio(i) * pow4(i)
}

/// `ln(C(2i, i) / 4^i) = Σ_{k=1}^{i} ln(1 − 1/(2k))`, compensated summation.
pub fn ln_central_binom_ratio(i: u64) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for k in 1..=i {
        let term = (-0.5 / k as f64).ln_1p();
        let next = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - next) + term
        } else {
            (term - next) + sum
        };
        sum = next;
    }
    sum + comp
}

fn pow4(i: u64) -> f64 {
    // exact power of two while it fits
    2f64.powi((2 * i).min(i32::MAX as u64) as i32)
}

/// `(4^i/√(π(i+1/2)), 4^i/√(π(i+1/4)))`, an enclosure of `C(2i, i)` for `i ≥ 1`.
///
/// Fails for `i = 0` and for `i > 500`; use [`central_binom_log_bounds`] there.
pub fn central_binom_bounds(i: u64) -> Result<Interval> {
    if i == 0 {
        return Err(Error::Domain("central binomial bounds need i ≥ 1".into()));
    }
    if i > LINEAR_BINOM_LIMIT {
        return Err(Error::Domain(format!(
            "4^{i} is out of range; use the log-space bounds for i > {LINEAR_BINOM_LIMIT}"
        )));
    }
    let p = pow4(i);
    let i = i as f64;
    Ok(Interval::ordered(
        p / (PI * (i + 0.5)).sqrt(),
        p / (PI * (i + 0.25)).sqrt(),
    ))
}

/// The same enclosure for `ln(C(2i, i)/4^i)`:
/// `(−½ ln(π(i+1/2)), −½ ln(π(i+1/4)))`. Valid for every `i ≥ 1`.
pub fn central_binom_log_bounds(i: u64) -> Result<Interval> {
    if i == 0 {
        return Err(Error::Domain("central binomial bounds need i ≥ 1".into()));
    }
    let i = i as f64;
    Ok(Interval::ordered(
        -0.5 * (PI * (i + 0.5)).ln(),
        -0.5 * (PI * (i + 0.25)).ln(),
    ))
}

/// Evaluates both sides of `Σ_{i≥0} s^{2i}/(i + 1/2) = (1/s) ln((1+s)/(1−s))`.
///
/// Returns `(partial_sum, closed_form)`. At `s = 0` both sides equal `2`: the
/// leading term is `1/(1/2)` and the closed form tends to `2`.
/// The partial sum stops once a term no longer changes it, or after
/// `MAX_TERMS` terms, so it is only meaningful for `|s|` comfortably below 1.
pub fn series_identity(s: f64) -> Result<(f64, f64)> {
    const MAX_TERMS: u32 = 1_000_000;
    if !(s.abs() < 1.0) {
        return Err(Error::Domain(format!("the series needs |s| < 1, got {s}")));
    }
    let s2 = s * s;
    let mut power = 1.0;
    let mut sum = 0.0;
    for i in 0..MAX_TERMS {
        let term = power / (f64::from(i) + 0.5);
        let next = sum + term;
        if next == sum {
            break;
        }
        sum = next;
        power *= s2;
    }
    let closed = if s == 0.0 {
        2.0
    } else {
        (s.ln_1p() - (-s).ln_1p()) / s
    };
    Ok((sum, closed))
}
