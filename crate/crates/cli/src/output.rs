//! Human-readable rendering. Machine formats live in `ellip_core::verify::report`.

use std::io::{self, Write};

use ellip_core::verify::{CheckEntry, InequalityRecord, Mode, Row, Status, SweepReport};

/// 12 significant digits, fixed notation where that stays readable.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

fn opt12(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_else(|| "-".into())
}

pub fn bounds_text<W: Write>(out: &mut W, rec: &InequalityRecord, row: &Row) -> io::Result<()> {
    let at: Vec<String> = rec
        .params
        .iter()
        .zip(&row.params)
        .map(|(k, v)| format!("{k} = {v}"))
        .collect();
    writeln!(out, "{}", rec.statement)?;
    if !at.is_empty() {
        writeln!(out, "at {}", at.join(", "))?;
    }
    let lo = row.lo.map(sig12).unwrap_or_else(|| "−∞".into());
    let hi = row.hi.map(sig12).unwrap_or_else(|| "+∞".into());
    let open = if row.lo.is_some() { "[" } else { "(" };
    let close = if row.hi.is_some() { "]" } else { ")" };
    writeln!(out, "interval:  {open}{lo}, {hi}{close}")?;
    writeln!(out, "reference: {}", opt12(row.reference))?;
    let verdict = match row.status {
        Status::Pass => "inside",
        Status::Fail => "OUTSIDE",
        Status::OracleError => "not evaluated",
    };
    writeln!(out, "status:    {verdict}")
}

pub fn sweep_text<W: Write>(out: &mut W, r: &SweepReport) -> io::Result<()> {
    let mut header: Vec<String> = r.params.clone();
    header.extend(["reference", "lo", "hi", "status"].map(String::from));
    writeln!(
        out,
        "{}",
        header
            .iter()
            .map(|h| format!("{h:>20}"))
            .collect::<String>()
    )?;
    for row in &r.rows {
        let mut cells: Vec<String> = row.params.iter().map(|v| sig12(*v)).collect();
        cells.extend([opt12(row.reference), opt12(row.lo), opt12(row.hi)]);
        cells.push(
            match row.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::OracleError => "oracle-error",
            }
            .into(),
        );
        writeln!(
            out,
            "{}",
            cells.iter().map(|c| format!("{c:>20}")).collect::<String>()
        )?;
    }
    summary_text(out, r)
}

fn summary_text<W: Write>(out: &mut W, r: &SweepReport) -> io::Result<()> {
    let s = &r.summary;
    writeln!(
        out,
        "record {} ({}): {} points, {} skipped by guard, {} failures, {} oracle errors, {} ties",
        r.record_id, r.mode, s.total, s.skipped, s.failures, s.oracle_errors, s.ties
    )?;
    writeln!(
        out,
        "max violation {:.3e}; relative gap below max {} mean {}; above max {} mean {}",
        s.max_violation,
        opt12(s.tightness.lower.max),
        opt12(s.tightness.lower.mean),
        opt12(s.tightness.upper.max),
        opt12(s.tightness.upper.mean)
    )
}

pub fn check_line<W: Write>(out: &mut W, e: &CheckEntry) -> io::Result<()> {
    let id = e.record.id;
    match &e.summary {
        Err(err) => writeln!(out, "ERROR  {id:<20} {err}"),
        Ok(s) => {
            let tag = match (e.record.mode, s.failures, s.oracle_errors) {
                (Mode::Observe, f, _) if f > 0 => "WARN ",
                (Mode::Enforce, f, _) if f > 0 => "FAIL ",
                (_, _, o) if o > 0 => "ERROR",
                _ => "ok   ",
            };
            writeln!(
                out,
                "{tag}  {id:<20} points {:>7}  skipped {:>7}  failures {:>4}  ties {:>4}  max_violation {:.3e}",
                s.total, s.skipped, s.failures, s.ties, s.max_violation
            )
        }
    }
}
