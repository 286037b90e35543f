use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed enclosure `[lo, hi]` with finite endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Domain(format!(
                "interval endpoints must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo > hi {
            return Err(Error::Domain(format!(
                "interval is empty: lo = {lo} > hi = {hi}"
            )));
        }
        Ok(Self { lo, hi })
    }

    /// Degenerate interval holding a single value.
    pub fn point(x: f64) -> Self {
        debug_assert!(x.is_finite());
        Self { lo: x, hi: x }
    }

    // Internal constructor for bounds whose ordering is guaranteed analytically.
    pub(crate) fn ordered(lo: f64, hi: f64) -> Self {
        debug_assert!(lo.is_finite() && hi.is_finite(), "[{lo}, {hi}]");
        if lo <= hi {
            Self { lo, hi }
        } else {
            // rounding can invert a zero-width interval by an ulp
            Self { lo: hi, hi: lo }
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// `lo - tol <= x <= hi + tol`.
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.lo <= x + tol && x <= self.hi + tol
    }

    /// `lo < x < hi`, no slack.
    pub fn contains_strictly(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "[{:.*}, {:.*}]", p, self.lo, p, self.hi),
            None => write!(f, "[{}, {}]", self.lo, self.hi),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 0.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn containment_with_slack() {
        let iv = Interval::new(1.0, 2.0).unwrap();
        assert!(iv.contains(1.0, 0.0));
        assert!(!iv.contains_strictly(1.0));
        assert!(iv.contains(0.9999, 1e-3));
        assert!(!iv.contains(2.1, 1e-3));
        assert_eq!(iv.width(), 1.0);
        assert_eq!(iv.midpoint(), 1.5);
    }
}
