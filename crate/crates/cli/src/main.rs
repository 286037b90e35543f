mod args;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use ellip_core::bounds::amm;
use ellip_core::error::Error;
use ellip_core::reference::{self, Axes, EvalResult, Modulus, QuadratureConfig};
use ellip_core::verify::{
    self, report, Axis, Grid, InequalityRecord, Mode, Spacing, Status, SweepReport,
};
use serde_json::json;

use args::{
    BoundsArgs, CheckArgs, Cli, Command, EvalArgs, Format, Function, Method, SpacingArg, SweepArgs,
};
use output::sig12;

/// A failed command and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidModulus(_)
            | Error::InvalidAxes { .. }
            | Error::InvalidConfig(_)
            | Error::InvalidGrid(_)
            | Error::Domain(_) => 2,
            Error::UnknownRecord(_) => {
                return Self::usage(format!("{e}; valid ids: {}", verify::ids().join(", ")))
            }
            Error::GuardEmpty { .. } => 3,
            Error::NonConvergence { .. }
            | Error::ToleranceNotMet { .. }
            | Error::Divergent { .. }
            | Error::NonFinite { .. }
            | Error::Report(_) => 4,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: 4,
            message: format!("cannot write output: {e}"),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => eval(a),
        Command::Bounds(a) => bounds(a),
        Command::Sweep(a) => sweep(a),
        Command::Check(a) => check(a),
        Command::List => list(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn require(value: Option<f64>, name: &str) -> Result<f64, Failure> {
    value.ok_or_else(|| Failure::usage(format!("missing --{name}")))
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Failure::usage(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn eval(args: EvalArgs) -> Outcome {
    let p = &args.point;
    let cfg = QuadratureConfig::default();
    let method = args.method.unwrap_or(match args.function {
        Function::Pi => Method::Quad,
        _ => Method::Agm,
    });
    let (label, r): (String, EvalResult) = match args.function {
        Function::E | Function::F => {
            let t = require(p.t, "t")?;
            let m = Modulus::new(t)?;
            let name = if args.function == Function::E {
                "E"
            } else {
                "F"
            };
            let r = match (args.function, method) {
                (Function::E, Method::Agm) => reference::e_agm(m)?,
                (Function::E, Method::Quad) => reference::e_quad(m, &cfg)?,
                (Function::E, Method::Series) => reference::e_series(m, args.terms)?,
                (_, Method::Agm) => reference::f_agm(m)?,
                (_, Method::Quad) => reference::f_quad(m, &cfg)?,
                (_, Method::Series) => {
                    return Err(Failure::usage(
                        "the series evaluator is only available for E",
                    ))
                }
            };
            (format!("{name}({t})"), r)
        }
        Function::Pi => {
            if method != Method::Quad {
                return Err(Failure::usage("Π is only available by quadrature"));
            }
            let (t, h) = (require(p.t, "t")?, require(p.h, "h")?);
            let r = reference::pi_quad(Modulus::new(t)?, h, &cfg)?;
            (format!("Π({t}, {h})"), r)
        }
        Function::Eab | Function::Fab => {
            if method != Method::Agm {
                return Err(Failure::usage(
                    "E(a, b) and F(a, b) are evaluated by the AGM",
                ));
            }
            let (a, b) = (require(p.a, "a")?, require(p.b, "b")?);
            let ax = Axes::new(a, b)?;
            let (name, r) = if args.function == Function::Eab {
                ("E", reference::e_ab(ax)?)
            } else {
                ("F", reference::f_ab(ax)?)
            };
            (format!("{name}({a}, {b})"), r)
        }
    };
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => writeln!(
            out,
            "{label} = {}  (method: {}, est_error: {:.2e})",
            sig12(r.value),
            r.method,
            r.est_error
        )?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "function": label, "value": r.value, "est_error": r.est_error, "method": r.method })
        )?,
        Format::Csv => {
            writeln!(out, "function,value,est_error,method")?;
            writeln!(
                out,
                "\"{label}\",{},{},{}",
                report::format_real(r.value),
                report::format_real(r.est_error),
                r.method
            )?;
        }
    }
    Ok(0)
}

fn point_for(rec: &InequalityRecord, p: &args::Point) -> Result<Vec<f64>, Failure> {
    rec.params
        .iter()
        .map(|name| require(p.get(name), name))
        .collect()
}

fn bounds(args: BoundsArgs) -> Outcome {
    if args.id == "amm" {
        return amm_chain(args.format);
    }
    let rec = verify::find(&args.id)?;
    let point = point_for(&rec, &args.point)?;
    // a single point sweep applies the guard and the status logic
    let report = verify::sweep(&rec, &Grid::points(vec![point]), f64::MIN_POSITIVE)?;
    let row = &report.rows[0];
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => output::bounds_text(&mut out, &rec, row)?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "record_id": rec.id,
                "statement": rec.statement,
                "params": rec.params.iter().zip(&row.params).map(|(k, v)| json!({ "name": k, "value": v })).collect::<Vec<_>>(),
                "lo": row.lo, "reference": row.reference, "hi": row.hi,
                "holds": row.status == Status::Pass,
            })
        )?,
        Format::Csv => report::write_csv(&report, &mut out)?,
    }
    Ok(if row.status == Status::OracleError {
        4
    } else {
        0
    })
}

fn amm_chain(format: Format) -> Outcome {
    let value = amm::integral(&QuadratureConfig::default())?.value;
    let chain = [
        ("π/6", amm::POSED_LOWER),
        ("1/4 + 19√2/96", amm::LOWER_B2),
        ("1/5 + 19√2/80", amm::LOWER_B3),
        ("3/10 + 27√2/160", amm::LOWER_B1),
        ("∫₀¹ dx/√(4 − x² − x³)", value),
        ("79/192 + √2/10", amm::IMPROVED_UPPER),
        ("π√2/8", amm::POSED_UPPER),
    ];
    let ordered = chain.windows(2).all(|w| w[0].1 < w[1].1);
    let mut out = io::stdout().lock();
    match format {
        Format::Text => {
            for (i, (name, v)) in chain.iter().enumerate() {
                let rel = if i == 0 { " " } else { "<" };
                writeln!(out, "{rel} {:<24} {}", name, sig12(*v))?;
            }
        }
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "chain": chain.iter().map(|(n, v)| json!({ "name": n, "value": v })).collect::<Vec<_>>(),
                "ordered": ordered,
            })
        )?,
        Format::Csv => {
            writeln!(out, "name,value")?;
            for (name, v) in chain {
                writeln!(out, "\"{name}\",{}", report::format_real(v))?;
            }
        }
    }
    Ok(if ordered { 0 } else { 1 })
}

fn sweep_grid(rec: &InequalityRecord, args: &SweepArgs) -> Result<Grid, Failure> {
    let defaults = match (rec.default_grid)() {
        Grid::Product(axes) => axes,
        Grid::Points(_) => Vec::new(),
    };
    let spacing = match args.spacing {
        SpacingArg::Linear => Spacing::Linear,
        SpacingArg::Log => Spacing::Log,
    };
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(rec.params.len());
    for (i, &name) in rec.params.iter().enumerate() {
        let fixed = args.point.get(name);
        let range = args.ranges.get(name);
        let values = match (fixed, range) {
            (Some(_), (Some(_), _) | (_, Some(_))) => {
                return Err(Failure::usage(format!(
                    "give either --{name} or --{name}-from/--{name}-to, not both"
                )))
            }
            (Some(v), _) => vec![v],
            (None, (Some(from), Some(to))) => {
                let axis = Axis::new(from, to, args.steps, spacing)?;
                let axis = if name == "t" {
                    axis.refine_near_one(args.refine)
                } else {
                    axis
                };
                axis.points()
            }
            (None, (Some(_), None) | (None, Some(_))) => {
                return Err(Failure::usage(format!(
                    "--{name}-from and --{name}-to go together"
                )))
            }
            (None, (None, None)) => match defaults.get(i) {
                Some(axis) => axis.points(),
                None => return Err(Failure::usage(format!("missing --{name}"))),
            },
        };
        columns.push(values);
    }
    let mut points = vec![Vec::with_capacity(columns.len())];
    for col in &columns {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                col.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(Grid::points(points))
}

fn exit_for(report: &SweepReport) -> u8 {
    if report.suite_failures() > 0 {
        1
    } else if report.summary.oracle_errors > 0 {
        4
    } else {
        0
    }
}

fn sweep(args: SweepArgs) -> Outcome {
    check_tol(args.tol)?;
    let rec = verify::find(&args.id)?;
    let grid = sweep_grid(&rec, &args)?;
    let report = verify::sweep(&rec, &grid, args.tol)?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    match args.format {
        Format::Csv => report::write_csv(&report, &mut out)?,
        Format::Json => {
            report::write_json(&report, &mut out)?;
            writeln!(out)?;
        }
        Format::Text => output::sweep_text(&mut out, &report)?,
    }
    out.flush()?;
    if report.findings() > 0 {
        eprintln!(
            "warning: {} is observed only; {} violation(s) reported as findings",
            rec.id,
            report.findings()
        );
    }
    Ok(exit_for(&report))
}

fn check(args: CheckArgs) -> Outcome {
    check_tol(args.tol)?;
    if args.format == Format::Csv {
        return Err(Failure::usage("check reports as text or json"));
    }
    let entries = if args.all {
        verify::check_all(args.tol)
    } else {
        let recs = args
            .ids
            .iter()
            .map(|id| verify::find(id))
            .collect::<Result<Vec<_>, _>>()?;
        recs.into_iter()
            .map(|record| verify::CheckEntry {
                summary: verify::sweep(&record, &(record.default_grid)(), args.tol)
                    .map(|r| r.summary),
                record,
            })
            .collect()
    };
    let failures: usize = entries.iter().map(|e| e.suite_failures()).sum();
    let findings: usize = entries.iter().map(|e| e.findings()).sum();
    let errors = entries
        .iter()
        .filter(|e| match &e.summary {
            Ok(s) => s.oracle_errors > 0,
            Err(_) => true,
        })
        .count();
    let mut out = io::stdout().lock();
    match args.format {
        Format::Json => {
            let records: Vec<_> = entries
                .iter()
                .map(|e| match &e.summary {
                    Ok(s) => json!({ "id": e.record.id, "mode": e.record.mode, "summary": s }),
                    Err(err) => json!({ "id": e.record.id, "mode": e.record.mode, "error": err.to_string() }),
                })
                .collect();
            writeln!(
                out,
                "{}",
                json!({
                    "schema_version": verify::SCHEMA_VERSION,
                    "tol": args.tol,
                    "records": records,
                    "failures": failures,
                    "findings": findings,
                    "errors": errors,
                })
            )?;
        }
        _ => {
            for e in &entries {
                output::check_line(&mut out, e)?;
            }
            writeln!(out, "failures: {failures}")?;
            writeln!(out, "findings: {findings}")?;
            if errors > 0 {
                writeln!(out, "errors: {errors}")?;
            }
        }
    }
    for e in entries.iter().filter(|e| e.findings() > 0) {
        eprintln!(
            "warning: observe-mode record {} has {} finding(s)",
            e.record.id,
            e.findings()
        );
    }
    Ok(if failures > 0 {
        1
    } else if errors > 0 {
        4
    } else {
        0
    })
}

fn list() -> Outcome {
    let mut out = io::stdout().lock();
    for rec in verify::register_builtin() {
        let params = if rec.params.is_empty() {
            "-".to_string()
        } else {
            rec.params.join(",")
        };
        let mode = match rec.mode {
            Mode::Enforce => "",
            Mode::Observe => " [observe]",
        };
        writeln!(out, "{:<20} ({params}){mode}", rec.id)?;
        writeln!(out, "    {}", rec.statement)?;
        writeln!(out, "    where {}", rec.guard_text)?;
    }
    Ok(0)
}
