//! Registry of inequalities and the engine that sweeps them over parameter
//! grids against the reference evaluators.

mod builtin;
mod grid;
mod record;
pub mod report;
mod sweep;

pub use builtin::{find, ids, register_builtin};
pub use grid::{Axis, Grid, Spacing};
pub use record::{Evaluator, InequalityRecord, Mode};
pub use sweep::{
    sweep, tightness_report, GapStats, Row, Status, Summary, SweepReport, Tightness, SCHEMA_VERSION,
};

use crate::error::Result;

/// Outcome of one record in [`check_all`].
#[derive(Debug, Clone)]
pub struct CheckEntry {
    pub record: InequalityRecord,
    pub summary: Result<Summary>,
}

impl CheckEntry {
    /// Failures that count against the suite.
    pub fn suite_failures(&self) -> usize {
        match (&self.summary, self.record.mode) {
            (Ok(s), Mode::Enforce) => s.failures,
            _ => 0,
        }
    }

    pub fn findings(&self) -> usize {
        match (&self.summary, self.record.mode) {
            (Ok(s), Mode::Observe) => s.failures,
            _ => 0,
        }
    }
}

/// Sweeps every built-in record over its default grid. Rows are dropped
/// once summarized.
pub fn check_all(tol: f64) -> Vec<CheckEntry> {
    register_builtin()
        .into_iter()
        .map(|record| CheckEntry {
            summary: sweep(&record, &(record.default_grid)(), tol).map(|r| r.summary),
            record,
        })
        .collect()
}
