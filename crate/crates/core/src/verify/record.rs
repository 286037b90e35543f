use std::fmt;

use serde::{Deserialize, Serialize};

use super::grid::Grid;
use crate::error::Result;

/// A bound or reference evaluated at one parameter point.
pub type Evaluator = fn(&[f64]) -> Result<f64>;

/// What a violation means for the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Violations are failures.
    Enforce,
    /// Violations are reported as findings and never fail the suite.
    Observe,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Enforce => "enforce",
            Mode::Observe => "observe",
        })
    }
}

/// One inequality `lower ≤ middle ≤ upper` (either side may be absent),
/// asserted wherever `guard` holds.
#[derive(Debug, Clone, Copy)]
pub struct InequalityRecord {
    pub id: &'static str,
    /// The inequality in plain notation.
    pub statement: &'static str,
    /// The hypothesis in plain notation.
    pub guard_text: &'static str,
    pub params: &'static [&'static str],
    pub mode: Mode,
    /// Whether the inequality is stated strictly; ties are then reported by
    /// the strictness pass.
    pub strict: bool,
    pub guard: fn(&[f64]) -> bool,
    pub lower: Option<Evaluator>,
    pub middle: Evaluator,
    pub upper: Option<Evaluator>,
    pub default_grid: fn() -> Grid,
}

impl InequalityRecord {
    pub fn is_one_sided(&self) -> bool {
        self.lower.is_none() || self.upper.is_none()
    }
}
