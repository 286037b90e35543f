//! CSV and JSON serialization of sweep reports.
//!
//! CSV starts with one metadata comment line, then a header
//! `record_id,<params…>,ref,lo,hi,pass,gap_lo,gap_hi`. Reals are printed
//! with 17 significant digits, which round-trips every `f64`; absent values
//! are empty fields. The summary is not written: the reader recomputes it.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::record::Mode;
use super::sweep::{summarize, Row, Status, SweepReport, SCHEMA_VERSION};
use crate::error::{Error, Result};

const MAGIC: &str = "# ellip-sweep";
const TAIL: [&str; 6] = ["ref", "lo", "hi", "pass", "gap_lo", "gap_hi"];

/// 17 significant digits.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

fn report_err<E: std::fmt::Display>(e: E) -> Error {
    Error::Report(e.to_string())
}

pub fn write_csv<W: Write>(report: &SweepReport, mut out: W) -> Result<()> {
    writeln!(
        out,
        "{MAGIC} schema={} record={} mode={} strict={} tol={} skipped={}",
        report.schema_version,
        report.record_id,
        report.mode,
        report.strict,
        format_real(report.tol),
        report.summary.skipped
    )
    .map_err(report_err)?;
    let mut w = csv::Writer::from_writer(out);
    let header = std::iter::once("record_id")
        .chain(report.params.iter().map(String::as_str))
        .chain(TAIL);
    w.write_record(header).map_err(report_err)?;
    for row in &report.rows {
        let mut fields = Vec::with_capacity(report.params.len() + 7);
        fields.push(report.record_id.clone());
        fields.extend(row.params.iter().copied().map(format_real));
        fields.extend([
            opt(row.reference),
            opt(row.lo),
            opt(row.hi),
            row.status.as_str().to_string(),
            opt(row.gap_lo),
            opt(row.gap_hi),
        ]);
        w.write_record(&fields).map_err(report_err)?;
    }
    w.flush().map_err(report_err)
}

pub fn to_csv_string(report: &SweepReport) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(report, &mut buf)?;
    String::from_utf8(buf).map_err(report_err)
}

fn parse_opt(field: &str) -> Result<Option<f64>> {
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse()
        .map(Some)
        .map_err(|_| Error::Report(format!("not a real: `{field}`")))
}

pub fn read_csv<R: BufRead>(mut input: R) -> Result<SweepReport> {
    let mut first = String::new();
    input.read_line(&mut first).map_err(report_err)?;
    let meta = first
        .trim_end()
        .strip_prefix(MAGIC)
        .ok_or_else(|| Error::Report("missing sweep metadata line".into()))?;
    let meta: HashMap<&str, &str> = meta
        .split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .collect();
    let get = |k: &str| {
        meta.get(k)
            .copied()
            .ok_or_else(|| Error::Report(format!("metadata lacks `{k}`")))
    };
    let schema_version: u32 = get("schema")?.parse().map_err(report_err)?;
    if schema_version != SCHEMA_VERSION {
        return Err(Error::Report(format!(
            "schema {schema_version} is not supported (expected {SCHEMA_VERSION})"
        )));
    }
    let mode = match get("mode")? {
        "enforce" => Mode::Enforce,
        "observe" => Mode::Observe,
        other => return Err(Error::Report(format!("unknown mode `{other}`"))),
    };
    let strict: bool = get("strict")?.parse().map_err(report_err)?;
    let tol: f64 = get("tol")?.parse().map_err(report_err)?;
    let skipped: usize = get("skipped")?.parse().map_err(report_err)?;
    let record_id = get("record")?.to_string();

    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(report_err)?.clone();
    let n = header.len();
    if n < 1 + TAIL.len()
        || &header[0] != "record_id"
        || header.iter().skip(n - TAIL.len()).ne(TAIL.iter().copied())
    {
        return Err(Error::Report("unexpected CSV header".into()));
    }
    let params: Vec<String> = header
        .iter()
        .skip(1)
        .take(n - 1 - TAIL.len())
        .map(str::to_string)
        .collect();
    let k = params.len();

    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(report_err)?;
        if &rec[0] != record_id.as_str() {
            return Err(Error::Report(format!(
                "row for `{}` in report for `{record_id}`",
                &rec[0]
            )));
        }
        let params = (1..=k)
            .map(|i| parse_opt(&rec[i])?.ok_or_else(|| Error::Report("empty parameter".into())))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(Row {
            params,
            reference: parse_opt(&rec[k + 1])?,
            lo: parse_opt(&rec[k + 2])?,
            hi: parse_opt(&rec[k + 3])?,
            status: rec[k + 4].parse::<Status>()?,
            gap_lo: parse_opt(&rec[k + 5])?,
            gap_hi: parse_opt(&rec[k + 6])?,
        });
    }
    let summary = summarize(&rows, skipped, strict);
    Ok(SweepReport {
        schema_version,
        record_id,
        mode,
        strict,
        tol,
        params,
        rows,
        summary,
    })
}

pub fn write_json<W: Write>(report: &SweepReport, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, report).map_err(report_err)
}

pub fn read_json<R: std::io::Read>(input: R) -> Result<SweepReport> {
    serde_json::from_reader(input).map_err(report_err)
}
