//! File formats: raw and scored CSV, curve CSV bundles, and JSON export.
//!
//! Floats are written with Rust's shortest round-trippable formatting, so a
//! save/load cycle reproduces every score bit for bit. Row numbers in errors
//! are 1-based and count data rows (the header is row 0).

use crate::balance::{BalanceValue, TradeoffPoint};
use crate::dataset::{ClassLabel, DataError, RawDataset, RawRecord, ScoredDataset};
use crate::metrics::Curve;
use crate::report::{IndistReport, ReplicationTable};
use std::fs;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad header: expected `{expected}`, found `{found}`")]
    BadHeader { expected: &'static str, found: String },
    #[error("row {row}: expected 2 comma-separated fields")]
    MissingField { row: usize },
    #[error("row {row}: could not parse {field} `{value}`")]
    InvalidNumber {
        row: usize,
        field: &'static str,
        value: String,
    },
    #[error("row {row}: {field} is not finite")]
    NonFinite { row: usize, field: &'static str },
    #[error("row {row}: label must be -1 or 1, found `{value}`")]
    InvalidLabel { row: usize, value: String },
    #[error(transparent)]
    Data(#[from] DataError),
}

fn split_two(line: &str, row: usize) -> Result<(&str, &str), CsvError> {
    let mut parts = line.split(',');
    let a = parts.next().ok_or(CsvError::MissingField { row })?;
    let b = parts.next().ok_or(CsvError::MissingField { row })?;
    if parts.next().is_some() {
        return Err(CsvError::MissingField { row });
    }
    Ok((a.trim(), b.trim()))
}

fn parse_label(text: &str, row: usize) -> Result<ClassLabel, CsvError> {
    text.parse::<i64>()
        .ok()
        .and_then(ClassLabel::from_int)
        .ok_or_else(|| CsvError::InvalidLabel {
            row,
            value: text.to_string(),
        })
}

/// Writes a raw dataset as `x,y` rows with `y` in `{-1, 1}`.
pub fn save_raw_csv(data: &RawDataset, path: &Path) -> Result<(), CsvError> {
    let mut out = String::from("x,y\n");
    for r in data.records() {
        out.push_str(&format!("{},{}\n", r.x, r.label.as_i8()));
    }
    write_file(path, out.as_bytes())
}

pub fn load_raw_csv(path: &Path) -> Result<RawDataset, CsvError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    if header.trim() != "x,y" {
        return Err(CsvError::BadHeader {
            expected: "x,y",
            found: header.to_string(),
        });
    }
    let mut records = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = idx + 1;
        let (x_text, y_text) = split_two(line, row)?;
        let x: f64 = x_text.parse().map_err(|_| CsvError::InvalidNumber {
            row,
            field: "x",
            value: x_text.to_string(),
        })?;
        if !x.is_finite() {
            return Err(CsvError::NonFinite { row, field: "x" });
        }
        records.push(RawRecord {
            x,
            label: parse_label(y_text, row)?,
        });
    }
    Ok(RawDataset::new(records)?)
}

/// Writes a scored dataset as `score,label` rows: positives ascending, then
/// negatives ascending.
pub fn save_scored_csv(ds: &ScoredDataset, path: &Path) -> Result<(), CsvError> {
    let mut out = String::from("score,label\n");
    for &s in ds.pos_scores() {
        out.push_str(&format!("{s},1\n"));
    }
    for &s in ds.neg_scores() {
        out.push_str(&format!("{s},-1\n"));
    }
    write_file(path, out.as_bytes())
}

pub fn load_scored_csv(path: &Path) -> Result<ScoredDataset, CsvError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    if header.trim() != "score,label" {
        return Err(CsvError::BadHeader {
            expected: "score,label",
            found: header.to_string(),
        });
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = idx + 1;
        let (s_text, y_text) = split_two(line, row)?;
        let score: f64 = s_text.parse().map_err(|_| CsvError::InvalidNumber {
            row,
            field: "score",
            value: s_text.to_string(),
        })?;
        if !score.is_finite() {
            return Err(CsvError::NonFinite { row, field: "score" });
        }
        match parse_label(y_text, row)? {
            ClassLabel::Positive => pos.push(score),
            ClassLabel::Negative => neg.push(score),
        }
    }
    Ok(ScoredDataset::new(pos, neg)?)
}

/// Writes a threshold sweep as `r,u,v,precision,f1` rows. The infinite
/// sentinel thresholds serialize as `-inf` / `inf`.
pub fn write_curve_csv(curve: &Curve, path: &Path) -> Result<(), CsvError> {
    let mut out = String::from("r,u,v,precision,f1\n");
    for p in &curve.points {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            p.r, p.u, p.v, p.precision, p.f1
        ));
    }
    write_file(path, out.as_bytes())
}

/// Writes the balance grid as `r,B,B_plus,B_minus` rows.
pub fn write_balance_csv(points: &[BalanceValue], path: &Path) -> Result<(), CsvError> {
    let mut out = String::from("r,B,B_plus,B_minus\n");
    for p in points {
        out.push_str(&format!("{},{},{},{}\n", p.r, p.b, p.b_plus, p.b_minus));
    }
    write_file(path, out.as_bytes())
}

/// Writes the balance-versus-operating-point sweep as `r,B,C,v,u` rows.
pub fn write_tradeoff_csv(points: &[TradeoffPoint], path: &Path) -> Result<(), CsvError> {
    let mut out = String::from("r,B,C,v,u\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            p.r, p.b, p.precision, p.v, p.u
        ));
    }
    write_file(path, out.as_bytes())
}

pub fn report_to_json(report: &IndistReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn write_report_json(report: &IndistReport, path: &Path) -> Result<(), CsvError> {
    write_file(path, report_to_json(report).as_bytes())
}

pub fn replication_to_json(table: &ReplicationTable) -> String {
    serde_json::to_string_pretty(table).expect("table serializes")
}

fn optional(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Replication summary as CSV; absent values are empty cells.
pub fn replication_to_csv(table: &ReplicationTable) -> String {
    let mut out = String::from("dataset,auc,r_b,c_at_rb,c_at_r40,c_at_r60,f1_at_rb,b_neg_inf\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.dataset,
            row.auc,
            optional(row.r_b),
            optional(row.c_at_rb),
            optional(row.c_at_r40),
            optional(row.c_at_r60),
            optional(row.f1_at_rb),
            row.b_neg_inf
        ));
    }
    out
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CsvError> {
    let mut file = fs::File::create(path)?;
    file.write_all(bytes)?;
    Ok(())
}
