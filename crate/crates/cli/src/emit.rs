use std::fmt::Write as _;

use clap::ValueEnum;
use thiserror::Error;

use crate::report::{Payload, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("csv output is not available for the {0} payload; use json or table")]
    UnsupportedPayloadForCsv(&'static str),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub fn emit(report: &Report, format: Format) -> Result<String, EmitError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv_bytes(report),
        Format::Table => Ok(table_text(report)),
    }
}

fn csv_bytes(report: &Report) -> Result<String, EmitError> {
    if let Payload::Example(_) = report.payload {
        return Err(EmitError::UnsupportedPayloadForCsv("example stage log"));
    }
    let table = report.payload.table();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn table_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ({})", report.command, report.mode);
    for (k, v) in &report.inputs {
        let _ = writeln!(out, "  {k} = {v}");
    }
    for (k, v) in report.payload.summary() {
        let _ = writeln!(out, "{k}: {v}");
    }
    let table = report.payload.table();
    let mut widths: Vec<usize> = table.header.iter().map(|h| h.len()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(table.header.clone()));
    let _ = writeln!(
        out,
        "{}",
        line(
            widths
                .iter()
                .map(|w| "-".repeat(*w))
                .collect::<Vec<_>>()
                .iter()
                .map(String::as_str)
                .collect()
        )
    );
    for row in &table.rows {
        let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
    }
    out
}
