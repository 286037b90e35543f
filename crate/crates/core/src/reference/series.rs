use std::f64::consts::FRAC_PI_2;

use super::{EvalResult, Method, Modulus};
use crate::error::{Error, Result};

/// Partial sum of the power series
/// `E(t) = (π/2)[1 − Σ_{i≥1} C(2i,i)² t^{2i} / (16^i (2i − 1))]`.
///
/// Every term is positive, so partial sums decrease toward `E(t)`. The ratio
/// of consecutive terms stays below `t²`, which bounds the tail by
/// `next_term / (1 − t²)`; that bound is reported as `est_error`.
pub fn e_series(t: Modulus, n_terms: u32) -> Result<EvalResult> {
    if n_terms == 0 {
        return Err(Error::Domain("the series needs at least one term".into()));
    }
    let t2 = t.get() * t.get();
    // r = C(2i,i)/4^i, p = t^{2i}
    let (mut r, mut p) = (1.0_f64, 1.0_f64);
    let mut sum = 0.0;
    let mut term = |i: u32| {
        let k = f64::from(i);
        r *= (2.0 * k - 1.0) / (2.0 * k);
        p *= t2;
        r * r * p / (2.0 * k - 1.0)
    };
    for i in 1..=n_terms {
        sum += term(i);
    }
    let next = term(n_terms + 1);
    let tail = next / ((1.0 - t.get()) * (1.0 + t.get()));
    Ok(EvalResult {
        value: FRAC_PI_2 * (1.0 - sum),
        est_error: FRAC_PI_2 * tail,
        method: Method::Series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::e_agm;

    fn m(t: f64) -> Modulus {
        Modulus::new(t).unwrap()
    }

    #[test]
    fn single_term() {
        let v = e_series(m(0.5), 1).unwrap().value;
        assert_eq!(v, FRAC_PI_2 * (1.0 - 1.0 / 16.0));
    }

    #[test]
    fn zero_terms_rejected() {
        assert!(e_series(m(0.5), 0).is_err());
    }

    #[test]
    fn forty_terms_match_agm() {
        let s = e_series(m(0.3), 40).unwrap();
        let a = e_agm(m(0.3)).unwrap().value;
        assert!((s.value - a).abs() < 1e-13, "{} vs {a}", s.value);
    }

    #[test]
    fn decreases_toward_agm_value_within_tail_bound() {
        for t in [0.1, 0.5, 0.8, 0.95] {
            let exact = e_agm(m(t)).unwrap().value;
            let mut prev = f64::INFINITY;
            for n in 1..200 {
                let s = e_series(m(t), n).unwrap();
                assert!(s.value <= prev, "t={t} n={n}");
                assert!(s.value >= exact - 1e-15, "t={t} n={n}");
                assert!(s.value - exact <= s.est_error + 1e-15, "t={t} n={n}");
                prev = s.value;
            }
        }
    }
}
