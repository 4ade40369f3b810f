use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;

use super::{default_out_path, FormatArg, VerifyReport};
use crate::afamily::FamilyDumpA;
use crate::bfamily::FamilyDumpB;
use crate::error::{Error, Result};
use crate::limits::ContractionReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub(crate) enum Document {
    FamilyA(FamilyDumpA),
    FamilyB(FamilyDumpB),
    Verify(VerifyReport),
    Contraction(ContractionReport),
}

/// Where a document went and what was written.
#[derive(Debug, Clone)]
pub struct Emitted {
    /// `None` for stdout.
    pub path: Option<PathBuf>,
    pub bytes: Vec<u8>,
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render_csv(doc: &Document) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidParams(format!("csv: {e}"));
    match doc {
        Document::FamilyA(d) => {
            w.write_record(["j", "power", "coeff"]).map_err(io)?;
            for (j, e, c) in d.csv_rows() {
                w.write_record([j.to_string(), e.to_string(), c]).map_err(io)?;
            }
        }
        Document::FamilyB(d) => {
            w.write_record(["n", "power", "coeff"]).map_err(io)?;
            for (n, e, c) in d.csv_rows() {
                w.write_record([n.to_string(), e.to_string(), c]).map_err(io)?;
            }
        }
        Document::Verify(r) => {
            w.write_record(["key", "passed", "detail"]).map_err(io)?;
            for c in &r.cases {
                w.write_record([c.key.as_str(), if c.passed { "true" } else { "false" }, c.detail.as_str()])
                    .map_err(io)?;
            }
        }
        Document::Contraction(r) => {
            w.write_record(["N", "dev_candidate1", "dev_candidate2"]).map_err(io)?;
            for (i, n) in r.n.iter().enumerate() {
                let d2 = r.dev_candidate2.as_ref().and_then(|v| v[i]);
                w.write_record([n.to_string(), opt(r.dev_candidate1[i]), opt(d2)]).map_err(io)?;
            }
        }
    }
    w.into_inner().map_err(|e| Error::InvalidParams(format!("csv: {e}")))
}

pub(crate) fn emit(doc: &Document, format: Format, out: Option<&str>, command: &str) -> Result<Emitted> {
    let mut bytes = match format {
        Format::Json => serde_json::to_vec_pretty(doc).map_err(|e| Error::InvalidParams(format!("json: {e}")))?,
        Format::Csv => render_csv(doc)?,
    };
    if format == Format::Json {
        bytes.push(b'\n');
    }
    let write_err = |e: std::io::Error| Error::InvalidParams(format!("cannot write output: {e}"));
    match out {
        Some("-") => {
            std::io::stdout().write_all(&bytes).map_err(write_err)?;
            Ok(Emitted { path: None, bytes })
        }
        other => {
            let path = other.map(PathBuf::from).unwrap_or_else(|| default_out_path(command, format));
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(write_err)?;
            }
            std::fs::write(&path, &bytes).map_err(write_err)?;
            Ok(Emitted { path: Some(path), bytes })
        }
    }
}
