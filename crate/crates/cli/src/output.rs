use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Bare values; only `count` differs from csv
    Text,
    Csv,
    Json,
}

/// A command's result, renderable as CSV rows or as one JSON document.
pub struct Output {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// Plain rendering for `--format text`; falls back to CSV when absent.
    pub text: Option<String>,
}

impl Output {
    pub fn table(header: &[&str], rows: Vec<Vec<String>>, json: Value) -> Self {
        Output {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
            json,
            text: None,
        }
    }

    pub fn write(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let sink: Box<dyn Write> = match out {
            Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
            None => Box::new(io::stdout().lock()),
        };
        let mut sink = BufWriter::new(sink);
        match (format, &self.text) {
            (Format::Text, Some(t)) => sink.write_all(t.as_bytes())?,
            (Format::Json, _) => {
                serde_json::to_writer_pretty(&mut sink, &self.json)?;
                sink.write_all(b"\n")?;
            }
            _ => {
                let mut w = csv::Writer::from_writer(&mut sink);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
        }
        sink.flush()?;
        Ok(())
    }
}

/// 17 significant digits, enough to round-trip an f64.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}
