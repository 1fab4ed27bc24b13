//! CSV and JSON report rendering.
//!
//! CSV files carry the manifest as a single `# manifest: {...}` comment
//! line, then a header row and plain rows: UTF-8, `\n` line endings, `.`
//! decimal separator, no quoting (no emitted value contains a comma).
//! JSON mirrors the same rows under a `rows` key next to the manifest.
//! Floats print in shortest round-trip form, so re-parsing a file
//! reproduces the exact values.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::manifest::RunManifest;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// One report: a column header and displayable rows that also serialize
/// to JSON.
pub trait Report {
    fn columns(&self) -> &'static [&'static str];
    fn csv_rows(&self) -> Vec<String>;
    fn json_rows(&self) -> serde_json::Value;
}

/// Typed report over serializable row structs.
pub struct Rows<T: Serialize> {
    pub columns: &'static [&'static str],
    pub rows: Vec<T>,
    pub to_csv: fn(&T) -> String,
}

impl<T: Serialize> Report for Rows<T> {
    fn columns(&self) -> &'static [&'static str] {
        self.columns
    }

    fn csv_rows(&self) -> Vec<String> {
        self.rows.iter().map(self.to_csv).collect()
    }

    fn json_rows(&self) -> serde_json::Value {
        serde_json::to_value(&self.rows).expect("rows serialize")
    }
}

/// Render a report with its manifest in the requested format.
pub fn render(report: &dyn Report, manifest: &RunManifest, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# manifest: {}", manifest.to_json());
            let _ = writeln!(out, "{}", report.columns().join(","));
            for row in report.csv_rows() {
                let _ = writeln!(out, "{row}");
            }
            out
        }
        Format::Json => {
            let doc = serde_json::json!({
                "manifest": manifest,
                "columns": report.columns(),
                "rows": report.json_rows(),
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
            out.push('\n');
            out
        }
    }
}

/// Write to the path, or stdout when none is given.
pub fn emit(out: Option<&Path>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// `base` extended with `.suffix.ext`, for commands that write more than
/// one file.
pub fn derived_path(base: &Path, suffix: &str, ext: &str) -> PathBuf {
    let mut name = base.as_os_str().to_os_string();
    name.push(format!(".{suffix}.{ext}"));
    PathBuf::from(name)
}
