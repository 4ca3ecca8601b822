use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::config::Format;
use crate::error::{CliError, CliResult};

/// Renders rows as CSV (header + LF-terminated records) or a JSON array.
pub fn render_table<T: Serialize>(rows: &[T], format: Format) -> CliResult<Vec<u8>> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            for row in rows {
                w.serialize(row).map_err(|e| CliError::Io(e.to_string()))?;
            }
            w.into_inner().map_err(|e| CliError::Io(e.to_string()))
        }
        Format::Json => render_json(&rows),
    }
}

pub fn render_json<T: Serialize + ?Sized>(value: &T) -> CliResult<Vec<u8>> {
    let mut buf = serde_json::to_vec_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    buf.push(b'\n');
    Ok(buf)
}

/// Writes to `path`, or to stdout when none is given.
pub fn write_output(bytes: &[u8], path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        a: f64,
        b: Option<f64>,
        label: &'static str,
    }

    #[test]
    fn csv_uses_lf_and_blank_for_none() {
        let rows = [Row { a: 1.5, b: None, label: "x" }, Row { a: 2.0, b: Some(0.25), label: "y" }];
        let text = String::from_utf8(render_table(&rows, Format::Csv).unwrap()).unwrap();
        assert_eq!(text, "a,b,label\n1.5,,x\n2.0,0.25,y\n");
    }

    #[test]
    fn json_array() {
        let rows = [Row { a: 1.0, b: None, label: "x" }];
        let v: serde_json::Value = serde_json::from_slice(&render_table(&rows, Format::Json).unwrap()).unwrap();
        assert_eq!(v[0]["b"], serde_json::Value::Null);
    }
}
