use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::Grid;
use super::record::{InequalityRecord, Mode};
use crate::error::{Error, Result};

/// Version of the row layout shared by the CSV and JSON reports.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The reference or a bound could not be evaluated; neither pass nor
    /// fail.
    OracleError,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "true",
            Status::Fail => "false",
            Status::OracleError => "oracle-error",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "true" => Ok(Status::Pass),
            "false" => Ok(Status::Fail),
            "oracle-error" => Ok(Status::OracleError),
            other => Err(Error::Report(format!("unknown status `{other}`"))),
        }
    }
}

/// One grid point. Gaps are `reference − lo` and `hi − reference`, so they
/// are negative exactly where a side is violated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub params: Vec<f64>,
    pub reference: Option<f64>,
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    pub status: Status,
    pub gap_lo: Option<f64>,
    pub gap_hi: Option<f64>,
}

/// Maximum and mean of a gap divided by `|reference|`, over passing rows.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GapStats {
    pub max: Option<f64>,
    pub mean: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Tightness {
    pub lower: GapStats,
    pub upper: GapStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    /// Evaluated points, i.e. rows.
    pub total: usize,
    /// Points rejected by the guard.
    pub skipped: usize,
    pub failures: usize,
    pub oracle_errors: usize,
    /// Passing rows that touch a strict bound with zero slack.
    pub ties: usize,
    /// Largest amount by which a side is exceeded, before tolerance.
    pub max_violation: f64,
    pub tightness: Tightness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub record_id: String,
    pub mode: Mode,
    pub strict: bool,
    pub tol: f64,
    pub params: Vec<String>,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl SweepReport {
    /// Failures that count against the suite: none in observe mode.
    pub fn suite_failures(&self) -> usize {
        match self.mode {
            Mode::Enforce => self.summary.failures,
            Mode::Observe => 0,
        }
    }

    /// Violations of an observe-mode record.
    pub fn findings(&self) -> usize {
        match self.mode {
            Mode::Enforce => 0,
            Mode::Observe => self.summary.failures,
        }
    }
}

/// Sweeps `rec` over `grid`. A side holds when it is exceeded by at most
/// `tol · max(1, |reference|)`.
///
/// Points run in parallel; rows come back in grid order, so the report is
/// identical from run to run.
pub fn sweep(rec: &InequalityRecord, grid: &Grid, tol: f64) -> Result<SweepReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let arity = rec.params.len();
    if grid.arity().is_some_and(|n| n != arity) {
        return Err(Error::InvalidGrid(format!(
            "`{}` takes {arity} parameter(s) ({}), the grid supplies {}",
            rec.id,
            rec.params.join(", "),
            grid.arity().unwrap_or(0)
        )));
    }
    let points = grid.expand()?;
    let total = points.len();
    let kept: Vec<Vec<f64>> = points.into_iter().filter(|p| (rec.guard)(p)).collect();
    if kept.is_empty() {
        return Err(Error::GuardEmpty {
            id: rec.id.to_string(),
            guard: rec.guard_text.to_string(),
        });
    }
    let skipped = total - kept.len();
    let rows: Vec<Row> = kept
        .into_par_iter()
        .map(|p| evaluate(rec, p, tol))
        .collect();
    let summary = summarize(&rows, skipped, rec.strict);
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        record_id: rec.id.to_string(),
        mode: rec.mode,
        strict: rec.strict,
        tol,
        params: rec.params.iter().map(|s| s.to_string()).collect(),
        rows,
        summary,
    })
}

/// Normalized gap statistics of `rec` over `grid`.
pub fn tightness_report(rec: &InequalityRecord, grid: &Grid, tol: f64) -> Result<Tightness> {
    sweep(rec, grid, tol).map(|r| r.summary.tightness)
}

fn finite(v: Result<f64>) -> Option<f64> {
    v.ok().filter(|x| x.is_finite())
}

fn evaluate(rec: &InequalityRecord, params: Vec<f64>, tol: f64) -> Row {
    let reference = finite((rec.middle)(&params));
    let lo = rec.lower.map(|f| finite(f(&params)));
    let hi = rec.upper.map(|f| finite(f(&params)));
    let missing = reference.is_none() || lo == Some(None) || hi == Some(None);
    let (lo, hi) = (lo.flatten(), hi.flatten());
    let gap_lo = reference.zip(lo).map(|(r, l)| r - l);
    let gap_hi = reference.zip(hi).map(|(r, h)| h - r);
    let status = match reference {
        _ if missing => Status::OracleError,
        Some(r) => {
            let slack = -tol * r.abs().max(1.0);
            let holds = |g: Option<f64>| g.map_or(true, |g| g >= slack);
            if holds(gap_lo) && holds(gap_hi) {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        None => Status::OracleError,
    };
    Row {
        params,
        reference,
        lo,
        hi,
        status,
        gap_lo,
        gap_hi,
    }
}

/// Recomputes the summary from rows; shared with the CSV reader so a parsed
/// report carries the same summary as the one written.
pub(crate) fn summarize(rows: &[Row], skipped: usize, strict: bool) -> Summary {
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let max_violation = rows
        .iter()
        .flat_map(|r| [r.gap_lo, r.gap_hi])
        .flatten()
        .fold(0.0_f64, |m, g| m.max(-g))
        + 0.0; // a zero gap would otherwise leave −0
    let passing = || rows.iter().filter(|r| r.status == Status::Pass);
    let ties = if strict {
        passing()
            .filter(|r| r.gap_lo.is_some_and(|g| g <= 0.0) || r.gap_hi.is_some_and(|g| g <= 0.0))
            .count()
    } else {
        0
    };
    let stats = |gap: fn(&Row) -> Option<f64>| {
        let normalized: Vec<f64> = passing()
            .filter_map(|r| {
                let g = gap(r)?;
                let scale = r.reference?.abs();
                Some(if scale > 0.0 { g / scale } else { g })
            })
            .collect();
        if normalized.is_empty() {
            return GapStats::default();
        }
        GapStats {
            max: Some(normalized.iter().copied().fold(f64::NEG_INFINITY, f64::max)),
            mean: Some(normalized.iter().sum::<f64>() / normalized.len() as f64),
        }
    };
    Summary {
        total: rows.len(),
        skipped,
        failures: count(Status::Fail),
        oracle_errors: count(Status::OracleError),
        ties,
        max_violation,
        tightness: Tightness {
            lower: stats(|r| r.gap_lo),
            upper: stats(|r| r.gap_hi),
        },
    }
}
