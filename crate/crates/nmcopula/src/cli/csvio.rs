//! Minimal CSV handling for the CLI: comma separator, mandatory header row,
//! UTF-8, numeric payload.

use std::fmt::Write as _;
use std::path::Path;

use super::CliError;

#[derive(Debug, Clone)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub columns: Vec<Vec<f64>>,
}

pub fn read_numeric_csv(path: &Path) -> Result<CsvTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::FileNotFound(path.display().to_string())
        } else {
            CliError::Io(format!("{}: {e}", path.display()))
        }
    })?;
    let mut lines = text.lines().enumerate();
    let header: Vec<String> = match lines.next() {
        Some((_, line)) => line.split(',').map(|s| s.trim().to_string()).collect(),
        None => {
            return Err(CliError::Parse {
                line: 1,
                message: "empty file (a header row is required)".into(),
            })
        }
    };
    if header.is_empty() || header.iter().all(|h| h.is_empty()) {
        return Err(CliError::Parse {
            line: 1,
            message: "empty header row".into(),
        });
    }
    let width = header.len();
    let mut columns = vec![Vec::new(); width];
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != width {
            return Err(CliError::Parse {
                line: line_no,
                message: format!("expected {width} fields, found {}", fields.len()),
            });
        }
        for (c, field) in fields.iter().enumerate() {
            let value: f64 = field.trim().parse().map_err(|_| CliError::Parse {
                line: line_no,
                message: format!("column {} ({:?}) is not a number", c + 1, field.trim()),
            })?;
            columns[c].push(value);
        }
    }
    if columns[0].is_empty() {
        return Err(CliError::Parse {
            line: 2,
            message: "no data rows after the header".into(),
        });
    }
    Ok(CsvTable { header, columns })
}

/// Writes columns with a header row; float formatting is the shortest
/// round-trip representation, so re-reading reproduces the exact values.
pub fn write_numeric_csv(
    path: &Path,
    header: &[String],
    columns: &[Vec<f64>],
) -> Result<(), CliError> {
    let n = columns.first().map(|c| c.len()).unwrap_or(0);
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for i in 0..n {
        for (c, col) in columns.iter().enumerate() {
            if c > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", col[i]);
        }
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
