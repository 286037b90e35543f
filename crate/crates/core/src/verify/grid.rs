use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    /// Geometric spacing; both ends must be positive.
    Log,
}

/// One scalar parameter's sample points: `steps` values from `from` to `to`
/// inclusive, plus optional refinement toward 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    from: f64,
    to: f64,
    steps: usize,
    spacing: Spacing,
    edge_refinement: usize,
}

/// Refinement points reach `1 − (1 − to)·EDGE_DEPTH`.
const EDGE_DEPTH: f64 = 1e-6;

impl Axis {
    pub fn new(from: f64, to: f64, steps: usize, spacing: Spacing) -> Result<Self> {
        if !(from.is_finite() && to.is_finite() && from < to) {
            return Err(Error::InvalidGrid(format!(
                "need finite from < to, got [{from}, {to}]"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidGrid(format!("need steps ≥ 2, got {steps}")));
        }
        if spacing == Spacing::Log && !(from > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "log spacing needs from > 0, got {from}"
            )));
        }
        Ok(Self {
            from,
            to,
            steps,
            spacing,
            edge_refinement: 0,
        })
    }

    pub fn linear(from: f64, to: f64, steps: usize) -> Result<Self> {
        Self::new(from, to, steps, Spacing::Linear)
    }

    pub fn log(from: f64, to: f64, steps: usize) -> Result<Self> {
        Self::new(from, to, steps, Spacing::Log)
    }

    /// Adds `n` points between `to` and 1, geometrically closer to 1, where
    /// `F` diverges and the bounds are under most strain. Ignored unless
    /// `to < 1`.
    pub fn refine_near_one(mut self, n: usize) -> Self {
        self.edge_refinement = n;
        self
    }

    pub fn from(&self) -> f64 {
        self.from
    }

    pub fn to(&self) -> f64 {
        self.to
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        let mut pts: Vec<f64> = (0..self.steps)
            .map(|k| {
                let f = k as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.from + (self.to - self.from) * f,
                    Spacing::Log => self.from * (self.to / self.from).powf(f),
                }
            })
            .collect();
        // pin the far end, which the formulas above may miss by an ulp
        pts[self.steps - 1] = self.to;
        if self.to < 1.0 {
            let gap = 1.0 - self.to;
            let n = self.edge_refinement as f64;
            pts.extend(
                (1..=self.edge_refinement).map(|k| 1.0 - gap * EDGE_DEPTH.powf(k as f64 / n)),
            );
        }
        pts
    }
}

/// The parameter points a sweep visits, in a fixed order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Grid {
    /// Cartesian product of one axis per parameter; the last axis varies
    /// fastest.
    Product(Vec<Axis>),
    /// An explicit list of points.
    Points(Vec<Vec<f64>>),
}

impl Grid {
    pub fn product(axes: Vec<Axis>) -> Self {
        Grid::Product(axes)
    }

    /// The single point of a parameterless record.
    pub fn unit() -> Self {
        Grid::Points(vec![Vec::new()])
    }

    pub fn points(pts: Vec<Vec<f64>>) -> Self {
        Grid::Points(pts)
    }

    /// Number of coordinates per point, or `None` for an empty point list.
    pub fn arity(&self) -> Option<usize> {
        match self {
            Grid::Product(axes) => Some(axes.len()),
            Grid::Points(pts) => pts.first().map(Vec::len),
        }
    }

    pub fn expand(&self) -> Result<Vec<Vec<f64>>> {
        match self {
            Grid::Points(pts) => {
                if let Some(first) = pts.first() {
                    if pts.iter().any(|p| p.len() != first.len()) {
                        return Err(Error::InvalidGrid("points of mixed arity".into()));
                    }
                }
                Ok(pts.clone())
            }
            Grid::Product(axes) => {
                let mut out = vec![Vec::with_capacity(axes.len())];
                for axis in axes {
                    let pts = axis.points();
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            pts.iter().map(move |&x| {
                                let mut p = prefix.clone();
                                p.push(x);
                                p
                            })
                        })
                        .collect();
                }
                Ok(out)
            }
        }
    }
}
