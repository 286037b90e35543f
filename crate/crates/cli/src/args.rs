use clap::{Args, Parser, Subcommand, ValueEnum};

/// Complete elliptic integrals: reference values, closed-form bounds and
/// verification sweeps.
///
/// Exit status: 0 success; 1 an enforced inequality failed; 2 usage error
/// or unknown record id; 3 no grid point satisfies the record's guard;
/// 4 a reference evaluation failed or output could not be written.
#[derive(Debug, Parser)]
#[command(name = "ellip", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

// parsed once per run, so the size of the largest variant does not matter
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate E, F or Π at one point.
    Eval(EvalArgs),
    /// Print a record's bounds at one point; `amm` prints its whole chain.
    Bounds(BoundsArgs),
    /// Sweep a record over a grid and report every point.
    Sweep(SweepArgs),
    /// Sweep records over their default grids and summarize.
    Check(CheckArgs),
    /// List the built-in records.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// E(t), second kind
    E,
    /// F(t), first kind
    F,
    /// Π(t, h), third kind
    Pi,
    /// E(a, b) = ∫ √(a²cos²θ + b²sin²θ) dθ
    Eab,
    /// F(a, b) = ∫ (a²cos²θ + b²sin²θ)^(−1/2) dθ
    Fab,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Agm,
    Quad,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Linear,
    Log,
}

/// Fixed parameter values, by name.
#[derive(Debug, Clone, Default, Args)]
pub struct Point {
    /// Modulus
    #[arg(long)]
    pub t: Option<f64>,
    /// Third-kind characteristic
    #[arg(long, allow_negative_numbers = true)]
    pub h: Option<f64>,
    /// First semi-axis
    #[arg(long)]
    pub a: Option<f64>,
    /// Second semi-axis
    #[arg(long)]
    pub b: Option<f64>,
    /// Abscissa on [0, 1]
    #[arg(long)]
    pub x: Option<f64>,
    /// Angle on [0, π/2]
    #[arg(long)]
    pub theta: Option<f64>,
}

impl Point {
    pub fn get(&self, name: &str) -> Option<f64> {
        match name {
            "t" => self.t,
            "h" => self.h,
            "a" => self.a,
            "b" => self.b,
            "x" => self.x,
            "theta" => self.theta,
            _ => None,
        }
    }
}

/// Parameter ranges for a sweep.
#[derive(Debug, Clone, Default, Args)]
pub struct Ranges {
    #[arg(long)]
    pub t_from: Option<f64>,
    #[arg(long)]
    pub t_to: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub h_from: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub h_to: Option<f64>,
    #[arg(long)]
    pub a_from: Option<f64>,
    #[arg(long)]
    pub a_to: Option<f64>,
    #[arg(long)]
    pub b_from: Option<f64>,
    #[arg(long)]
    pub b_to: Option<f64>,
    #[arg(long)]
    pub x_from: Option<f64>,
    #[arg(long)]
    pub x_to: Option<f64>,
    #[arg(long)]
    pub theta_from: Option<f64>,
    #[arg(long)]
    pub theta_to: Option<f64>,
}

impl Ranges {
    pub fn get(&self, name: &str) -> (Option<f64>, Option<f64>) {
        match name {
            "t" => (self.t_from, self.t_to),
            "h" => (self.h_from, self.h_to),
            "a" => (self.a_from, self.a_to),
            "b" => (self.b_from, self.b_to),
            "x" => (self.x_from, self.x_to),
            "theta" => (self.theta_from, self.theta_to),
            _ => (None, None),
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum, ignore_case = true)]
    pub function: Function,
    #[command(flatten)]
    pub point: Point,
    /// Reference evaluator; Π is only available by quadrature.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Terms of the power series, with `--method series`.
    #[arg(long, default_value_t = 40)]
    pub terms: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    pub id: String,
    #[command(flatten)]
    pub point: Point,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub id: String,
    /// A parameter given a single value is held fixed.
    #[command(flatten)]
    pub point: Point,
    /// A parameter given a range is sampled; one with neither uses the
    /// record's default axis.
    #[command(flatten)]
    pub ranges: Ranges,
    /// Points per ranged parameter.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = SpacingArg::Linear)]
    pub spacing: SpacingArg,
    /// Extra points of a `t` range placed geometrically closer to 1.
    #[arg(long, default_value_t = 0)]
    pub refine: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Allowed violation, relative to max(1, |reference|).
    #[arg(long, env = "ELLIP_TOL", default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Check every built-in record.
    #[arg(long, conflicts_with = "ids")]
    pub all: bool,
    /// Records to check.
    #[arg(required_unless_present = "all")]
    pub ids: Vec<String>,
    #[arg(long, env = "ELLIP_TOL", default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
