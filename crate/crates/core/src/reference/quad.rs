//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate falls below `max(abs_tol, rel_tol * |value|)`. The local estimate
//! is the raw difference between the 15-point Kronrod and the embedded 7-point
//! Gauss result, which overstates the Kronrod error for smooth integrands.
//! Endpoints are never sampled, so integrable endpoint singularities are
//! tolerated.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Kronrod abscissae on [0, 1]; odd indices are the Gauss-7 nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Upper bound on live subintervals before giving up.
const MAX_SEGMENTS: usize = 50_000;

/// Ratio of child to parent error above which refinement is judged stalled.
const STALL_RATIO: f64 = 0.9;

/// Tolerances and depth limit for the adaptive scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    abs_tol: f64,
    rel_tol: f64,
    max_depth: u32,
}

impl QuadratureConfig {
    pub const MIN_TOL: f64 = 16.0 * f64::EPSILON;
    pub const MAX_DEPTH: u32 = 64;

    pub fn new(abs_tol: f64, rel_tol: f64, max_depth: u32) -> Result<Self> {
        if !(abs_tol >= Self::MIN_TOL) || !abs_tol.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "abs_tol must be at least {:e}, got {abs_tol:e}",
                Self::MIN_TOL
            )));
        }
        if !(rel_tol >= Self::MIN_TOL) || !rel_tol.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "rel_tol must be at least {:e}, got {rel_tol:e}",
                Self::MIN_TOL
            )));
        }
        if max_depth == 0 || max_depth > Self::MAX_DEPTH {
            return Err(Error::InvalidConfig(format!(
                "max_depth must lie in 1..={}, got {max_depth}",
                Self::MAX_DEPTH
            )));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_depth,
        })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-13,
            max_depth: 48,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Quadrature {
    pub value: f64,
    pub est_error: f64,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
    parent_err: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite { x })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let pair = eval(center - dx)? + eval(center + dx)?;
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Ok((kronrod * half, ((kronrod - gauss) * half).abs()))
}

/// Integrates `f` over `[lo, hi]` (`lo < hi`, both finite).
pub(crate) fn integrate<F>(f: F, lo: f64, hi: f64, cfg: &QuadratureConfig) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain(format!(
            "integration limits must be finite with lo < hi, got [{lo}, {hi}]"
        )));
    }

    let (value, err) = gk15(&f, lo, hi)?;
    let mut heap = BinaryHeap::new();
    heap.push(Segment {
        lo,
        hi,
        value,
        err,
        parent_err: f64::INFINITY,
        depth: 0,
    });
    let mut total = value;
    let mut total_err = err;

    loop {
        if total_err <= cfg.tolerance_for(total) {
            // incremental sums drift; settle on a fresh reduction
            let (value, est_error) = heap
                .iter()
                .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.err));
            if est_error <= cfg.tolerance_for(value) {
                return Ok(Quadrature { value, est_error });
            }
            total = value;
            total_err = est_error;
        }

        let worst = *heap.peek().expect("segment heap is never empty");
        if worst.depth >= cfg.max_depth || heap.len() >= MAX_SEGMENTS {
            let mid = 0.5 * (worst.lo + worst.hi);
            if worst.err >= STALL_RATIO * worst.parent_err {
                return Err(Error::Divergent { x: mid });
            }
            return Err(Error::ToleranceNotMet {
                value: total,
                est_error: total_err,
                tolerance: cfg.tolerance_for(total),
            });
        }
        heap.pop();

        let mid = 0.5 * (worst.lo + worst.hi);
        if !(worst.lo < mid && mid < worst.hi) {
            // interval exhausted at floating-point resolution
            return Err(Error::ToleranceNotMet {
                value: total,
                est_error: total_err,
                tolerance: cfg.tolerance_for(total),
            });
        }
        let (lv, le) = gk15(&f, worst.lo, mid)?;
        let (rv, re) = gk15(&f, mid, worst.hi)?;
        total += lv + rv - worst.value;
        total_err += le + re - worst.err;
        for (a, b, v, e) in [(worst.lo, mid, lv, le), (mid, worst.hi, rv, re)] {
            heap.push(Segment {
                lo: a,
                hi: b,
                value: v,
                err: e,
                parent_err: worst.err,
                depth: worst.depth + 1,
            });
        }
    }
}
