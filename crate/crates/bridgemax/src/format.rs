//! CSV and JSON serialization for the library's data objects.
//!
//! Reals are written with 17 significant digits, which round-trips every
//! finite `f64` exactly; the CSV readers are therefore exact inverses of the
//! writers. CSV files carry their metadata in leading `# key=value` comment
//! lines followed by a column-header line.

use std::fmt::Write as _;

use crate::fredholm::{CdfCurve, CurveMeta};
use crate::kernels::KernelMatrix;
use crate::montecarlo::SampleBatch;
use crate::{Error, Result};

/// Formats a real with 17 significant digits (exact `f64` round-trip).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_f64(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad real {s:?}")))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("non-finite real {s:?}")));
    }
    Ok(v)
}

fn check_meta_text(value: &str) -> Result<()> {
    if value.contains('\n') || value.contains('\r') {
        return Err(Error::Parse(format!(
            "metadata value may not contain line breaks: {value:?}"
        )));
    }
    Ok(())
}

/// Splits leading `# key=value` lines from the body lines.
fn split_header(text: &str) -> (Vec<(&str, &str)>, Vec<&str>) {
    let mut meta = Vec::new();
    let mut body = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix('#') {
            if let Some((k, v)) = rest.trim_start().split_once('=') {
                meta.push((k.trim(), v));
            }
        } else if !line.trim().is_empty() {
            body.push(line);
        }
    }
    (meta, body)
}

fn lookup<'a>(meta: &[(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    meta.iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Parse(format!("missing `# {key}=` header line")))
}

/// CSV form of a CDF curve: metadata comments, then `r,value` rows.
pub fn curve_to_csv(curve: &CdfCurve) -> Result<String> {
    check_meta_text(&curve.meta.model)?;
    check_meta_text(&curve.meta.method)?;
    let mut out = String::new();
    writeln!(out, "# model={}", curve.meta.model).unwrap();
    writeln!(out, "# method={}", curve.meta.method).unwrap();
    writeln!(out, "r,value").unwrap();
    for (r, v) in curve.grid.iter().zip(&curve.values) {
        writeln!(out, "{},{}", fmt_f64(*r), fmt_f64(*v)).unwrap();
    }
    Ok(out)
}

/// Parses the output of [`curve_to_csv`]; validates the curve invariants.
pub fn curve_from_csv(text: &str) -> Result<CdfCurve> {
    let (meta, body) = split_header(text);
    let model = lookup(&meta, "model")?.to_string();
    let method = lookup(&meta, "method")?.to_string();
    let mut lines = body.into_iter();
    match lines.next() {
        Some(h) if h.trim() == "r,value" => {}
        other => {
            return Err(Error::Parse(format!(
                "expected `r,value` header, got {other:?}"
            )))
        }
    }
    let mut grid = Vec::new();
    let mut values = Vec::new();
    for line in lines {
        let (r, v) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `r,value` row, got {line:?}")))?;
        grid.push(parse_f64(r)?);
        values.push(parse_f64(v)?);
    }
    CdfCurve::new(grid, values, CurveMeta { model, method })
}

/// JSON form of a CDF curve (serde; shortest round-trip float encoding).
pub fn curve_to_json(curve: &CdfCurve) -> Result<String> {
    serde_json::to_string_pretty(curve).map_err(|e| Error::Parse(e.to_string()))
}

pub fn curve_from_json(text: &str) -> Result<CdfCurve> {
    let curve: CdfCurve =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    curve.validate()?;
    Ok(curve)
}

/// CSV form of a sample batch: metadata comments, then one value per row.
pub fn batch_to_csv(batch: &SampleBatch) -> Result<String> {
    check_meta_text(&batch.model)?;
    batch.validate()?;
    let mut out = String::new();
    writeln!(out, "# model={}", batch.model).unwrap();
    writeln!(out, "# seed={}", batch.seed).unwrap();
    writeln!(out, "# n={}", batch.n).unwrap();
    writeln!(out, "value").unwrap();
    for v in &batch.values {
        writeln!(out, "{}", fmt_f64(*v)).unwrap();
    }
    Ok(out)
}

/// Parses the output of [`batch_to_csv`]; validates the batch invariants.
pub fn batch_from_csv(text: &str) -> Result<SampleBatch> {
    let (meta, body) = split_header(text);
    let model = lookup(&meta, "model")?.to_string();
    let seed: u64 = lookup(&meta, "seed")?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("bad seed".into()))?;
    let n: usize = lookup(&meta, "n")?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("bad n".into()))?;
    let mut lines = body.into_iter();
    match lines.next() {
        Some(h) if h.trim() == "value" => {}
        other => {
            return Err(Error::Parse(format!(
                "expected `value` header, got {other:?}"
            )))
        }
    }
    let values = lines.map(parse_f64).collect::<Result<Vec<_>>>()?;
    let batch = SampleBatch { values, model, seed, n };
    batch.validate()?;
    Ok(batch)
}

pub fn batch_to_json(batch: &SampleBatch) -> Result<String> {
    batch.validate()?;
    serde_json::to_string_pretty(batch).map_err(|e| Error::Parse(e.to_string()))
}

pub fn batch_from_json(text: &str) -> Result<SampleBatch> {
    let batch: SampleBatch =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    batch.validate()?;
    Ok(batch)
}

/// Debug CSV dump of a kernel matrix: row-major entries at full precision.
pub fn matrix_to_csv(m: &KernelMatrix) -> Result<String> {
    check_meta_text(&m.label)?;
    let mut out = String::new();
    writeln!(out, "# label={}", m.label).unwrap();
    writeln!(out, "# rows={}..={}", m.row_range.0, m.row_range.1).unwrap();
    writeln!(out, "# cols={}..={}", m.col_range.0, m.col_range.1).unwrap();
    for i in 0..m.entries.nrows() {
        let row: Vec<String> = (0..m.entries.ncols())
            .map(|j| fmt_f64(m.entries[(i, j)]))
            .collect();
        writeln!(out, "{}", row.join(",")).unwrap();
    }
    Ok(out)
}
