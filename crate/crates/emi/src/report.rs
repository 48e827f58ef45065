//! Serialized outputs: convergence reports and single-run documents in text,
//! CSV and JSON.
//!
//! JSON schema for scans:
//! `{mode, precision, rows: [{L, M, value, matchedDigits, absError, estOrder|null}]}`.
//! CSV carries the row columns under the same names.

use std::fmt::Write as _;

use emi_core::pi::ConvergenceReport;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RowDocument {
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "M")]
    pub m: u32,
    pub value: String,
    pub matched_digits: usize,
    pub abs_error: String,
    pub est_order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub mode: String,
    pub precision: u32,
    pub rows: Vec<RowDocument>,
}

impl From<&ConvergenceReport> for ReportDocument {
    fn from(report: &ConvergenceReport) -> Self {
        ReportDocument {
            mode: report.mode.name().to_string(),
            precision: report.precision,
            rows: report
                .rows
                .iter()
                .map(|r| RowDocument {
                    l: r.subintervals,
                    m: r.order,
                    value: r.value.clone(),
                    matched_digits: r.matched_digits,
                    abs_error: r.abs_error.clone(),
                    est_order: r.est_order,
                })
                .collect(),
        }
    }
}

impl ReportDocument {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => to_json(self),
            Format::Csv => csv_rows(&self.rows),
            Format::Text => Ok(self.to_text()),
        }
    }

    fn to_text(&self) -> String {
        let mut out = format!("mode: {}  precision: {}\n", self.mode, self.precision);
        let _ = writeln!(out, "{:>6} {:>4} {:>8} {:>14} {:>8}  value", "L", "M", "matched", "abs error", "order");
        for r in &self.rows {
            let order = r.est_order.map_or_else(|| "-".to_string(), |p| format!("{p:.3}"));
            let _ = writeln!(
                out,
                "{:>6} {:>4} {:>8} {:>14} {:>8}  {}",
                r.l, r.m, r.matched_digits, r.abs_error, order, r.value
            );
        }
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    Ok(serde_json::from_str(s)?)
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

/// Renders a flat single-run document. Text is one `key: value` line per
/// present field.
pub fn render_document<T: Serialize>(doc: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => csv_rows(std::slice::from_ref(doc)),
        Format::Text => {
            let value = serde_json::to_value(doc)?;
            let mut out = String::new();
            if let serde_json::Value::Object(map) = value {
                for (key, v) in map {
                    match v {
                        serde_json::Value::Null => {}
                        serde_json::Value::String(s) => {
                            let _ = writeln!(out, "{key}: {s}");
                        }
                        other => {
                            let _ = writeln!(out, "{key}: {other}");
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}
