use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::args::Format;
use crate::CliError;

/// Shortest representation that parses back to the same value.
pub fn num(v: f64) -> String {
    format!("{v:?}")
}

/// Rows for CSV output; the header is always written.
pub trait Table {
    fn header(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

#[derive(Debug, Serialize)]
pub struct Report<M, B> {
    pub model: M,
    pub method: &'static str,
    #[serde(flatten)]
    pub body: B,
}

pub fn render<M: Serialize, B: Serialize + Table>(report: &Report<M, B>, format: Format) -> Result<Vec<u8>, CliError> {
    let fail = |e: &dyn std::fmt::Display| CliError::Output(e.to_string());
    match format {
        Format::Json => {
            let mut buf = serde_json::to_vec_pretty(report).map_err(|e| fail(&e))?;
            buf.push(b'\n');
            Ok(buf)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(report.body.header()).map_err(|e| fail(&e))?;
            for row in report.body.rows() {
                w.write_record(&row).map_err(|e| fail(&e))?;
            }
            w.into_inner().map_err(|e| fail(&e))
        }
    }
}

pub fn emit<M: Serialize, B: Serialize + Table>(
    report: &Report<M, B>,
    format: Format,
    path: Option<&Path>,
) -> Result<(), CliError> {
    let bytes = render(report, format)?;
    match path {
        Some(p) => File::create(p)
            .and_then(|mut f| f.write_all(&bytes))
            .map_err(|e| CliError::Output(format!("{}: {e}", p.display()))),
        None => match io::stdout().lock().write_all(&bytes) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(CliError::Output(e.to_string())),
            _ => Ok(()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for v in [-4.0, 0.1, 1e-300, -6.25, 1.0 / 3.0, 123456789.125] {
            assert_eq!(num(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(num(-4.0), "-4.0");
        assert_eq!(num(0.1), "0.1");
    }
}
