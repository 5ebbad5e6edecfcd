//! Front, trace and summary files.
//!
//! Front CSV: header `f1,f2`, one point per row. Trace CSV: `iter,dg,ef`, or
//! `iter,best_psi` for problems without a reference front (empty before the
//! first iteration). Numbers use positional decimal notation with 17
//! significant digits, which parses back to the identical `f64`.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use mofa::TracePoint;
use serde::Serialize;

use crate::args::Format;
use crate::error::CliError;

/// `v` in positional notation with 17 significant digits.
pub fn format_f64(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0.0".into() } else { "0.0".into() };
    }
    // Take the decimal exponent after rounding to 17 digits, so 9.99..95
    // rounding up to 10 is handled.
    let sci = format!("{v:.16e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    let decimals = (16 - exp).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if decimals == 0 {
        s.push_str(".0");
    }
    s
}

fn create(path: &Path) -> Result<BufWriter<fs::File>, CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::File::create(path).map(BufWriter::new).map_err(|e| CliError::io(path, e))
}

fn finish(mut w: BufWriter<fs::File>, path: &Path) -> Result<(), CliError> {
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn front_text(points: &[Vec<f64>], format: Format) -> String {
    match format {
        Format::Csv => {
            let k = points.first().map_or(2, Vec::len);
            let header: Vec<String> = (1..=k).map(|i| format!("f{i}")).collect();
            let mut out = header.join(",");
            out.push('\n');
            for p in points {
                let row: Vec<String> = p.iter().map(|&v| format_f64(v)).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(points).expect("finite floats serialize");
            s.push('\n');
            s
        }
    }
}

pub fn write_front(path: &Path, points: &[Vec<f64>], format: Format) -> Result<(), CliError> {
    let mut w = create(path)?;
    w.write_all(front_text(points, format).as_bytes()).map_err(|e| CliError::io(path, e))?;
    finish(w, path)
}

/// Reads a front written by [`write_front`] in either format.
pub fn read_front(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let bad = |msg: String| CliError::Runtime(format!("{}: {msg}", path.display()));
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| bad(e.to_string()));
    }
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let k = header.split(',').count();
    lines
        .enumerate()
        .map(|(i, line)| {
            let row: Vec<f64> = line
                .split(',')
                .map(|v| v.parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| bad(format!("row {}: {e}", i + 1)))?;
            if row.len() == k {
                Ok(row)
            } else {
                Err(bad(format!("row {} has {} fields, expected {k}", i + 1, row.len())))
            }
        })
        .collect()
}

#[derive(Serialize)]
struct MetricRow {
    iter: usize,
    dg: Option<f64>,
    ef: Option<f64>,
}

#[derive(Serialize)]
struct PsiRow {
    iter: usize,
    best_psi: Option<f64>,
}

pub fn write_trace(path: &Path, trace: &[TracePoint<f64>], has_reference: bool, format: Format) -> Result<(), CliError> {
    let mut out = String::new();
    let opt = |v: Option<f64>| v.map(format_f64).unwrap_or_default();
    match format {
        Format::Csv if has_reference => {
            out.push_str("iter,dg,ef\n");
            for t in trace {
                out.push_str(&format!("{},{},{}\n", t.iteration, opt(t.dg), opt(t.ef)));
            }
        }
        Format::Csv => {
            out.push_str("iter,best_psi\n");
            for t in trace {
                out.push_str(&format!("{},{}\n", t.iteration, opt(t.best_psi)));
            }
        }
        Format::Json if has_reference => {
            let rows: Vec<MetricRow> = trace.iter().map(|t| MetricRow { iter: t.iteration, dg: t.dg, ef: t.ef }).collect();
            out = serde_json::to_string_pretty(&rows).expect("trace serializes");
            out.push('\n');
        }
        Format::Json => {
            let rows: Vec<PsiRow> = trace.iter().map(|t| PsiRow { iter: t.iteration, best_psi: t.best_psi }).collect();
            out = serde_json::to_string_pretty(&rows).expect("trace serializes");
            out.push('\n');
        }
    }
    let mut w = create(path)?;
    w.write_all(out.as_bytes()).map_err(|e| CliError::io(path, e))?;
    finish(w, path)
}

pub fn write_json<S: Serialize + ?Sized>(path: &Path, value: &S) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("summary serializes");
    text.push('\n');
    let mut w = create(path)?;
    w.write_all(text.as_bytes()).map_err(|e| CliError::io(path, e))?;
    finish(w, path)
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let mut w = create(path)?;
    w.write_all(text.as_bytes()).map_err(|e| CliError::io(path, e))?;
    finish(w, path)
}
