//! Reading labeled adjacency matrices from CSV.
//!
//! Layout: a header row of `N` column labels (optionally preceded by an empty
//! corner cell), then `N` rows of `label, x_1, …, x_N`. Any nonzero entry is
//! read as 1.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Result, SxError};
use crate::graph::RawMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedMatrix {
    pub matrix: RawMatrix,
    pub warnings: Vec<ParseWarning>,
    /// Hex SHA-256 of the input bytes.
    pub sha256: String,
}

pub fn parse_matrix_csv(path: impl AsRef<Path>) -> Result<ParsedMatrix> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| SxError::io(path, e))?;
    parse_matrix_bytes(&bytes)
}

pub fn parse_matrix_bytes(bytes: &[u8]) -> Result<ParsedMatrix> {
    let sha256 = hex::encode(Sha256::digest(bytes));
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);

    let mut records = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| SxError::Csv {
            line: e.position().map_or(i + 1, |p| p.line() as usize),
            column: 0,
            message: e.to_string(),
        })?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        records.push((line, rec));
    }

    let Some((header_line, header)) = records.first() else {
        return Err(SxError::EmptyMatrix);
    };
    let data = &records[1..];
    if data.is_empty() {
        return Err(SxError::EmptyMatrix);
    }

    // a leading empty corner cell makes the header as wide as the data rows
    let has_corner = header.len() == data[0].1.len() && header.get(0) == Some("");
    let labels: Vec<String> = header.iter().skip(usize::from(has_corner)).map(str::to_owned).collect();
    let n = labels.len();
    if let Some(pos) = labels.iter().position(String::is_empty) {
        return Err(SxError::Csv {
            line: *header_line,
            column: pos + 1 + usize::from(has_corner),
            message: "empty column label".into(),
        });
    }

    if data.len() != n {
        return Err(SxError::Csv {
            line: data.last().map_or(*header_line, |(l, _)| *l),
            column: 0,
            message: format!("matrix is not square: {n} column labels but {} data rows", data.len()),
        });
    }

    let mut warnings = Vec::new();
    let mut entries = Vec::with_capacity(n);
    for (row, (line, rec)) in data.iter().enumerate() {
        if rec.len() != n + 1 {
            return Err(SxError::Csv {
                line: *line,
                column: rec.len(),
                message: format!(
                    "data row {} has {} entries, expected a label plus {n} values",
                    row + 1,
                    rec.len()
                ),
            });
        }
        let row_label = &rec[0];
        if row_label != labels[row] {
            warnings.push(ParseWarning {
                line: *line,
                column: 1,
                message: format!("row label {row_label:?} differs from column label {:?}", labels[row]),
            });
        }
        let mut values = Vec::with_capacity(n);
        for (col, cell) in rec.iter().skip(1).enumerate() {
            let x: f64 = cell.parse().map_err(|_| SxError::Csv {
                line: *line,
                column: col + 2,
                message: format!("non-numeric entry {cell:?}"),
            })?;
            if !x.is_finite() {
                return Err(SxError::Csv {
                    line: *line,
                    column: col + 2,
                    message: format!("non-finite entry {cell:?}"),
                });
            }
            if x != 0.0 && x != 1.0 {
                warnings.push(ParseWarning {
                    line: *line,
                    column: col + 2,
                    message: format!("entry {cell:?} treated as 1"),
                });
            }
            values.push(if x != 0.0 { 1.0 } else { 0.0 });
        }
        entries.push(values);
    }

    let matrix = RawMatrix::new(labels, entries);
    // reuse the duplicate-label diagnostics of the graph layer
    crate::graph::normalize_graph(&matrix, true)?;
    Ok(ParsedMatrix {
        matrix,
        warnings,
        sha256,
    })
}

/// Writes a matrix in the layout [`parse_matrix_csv`] reads (with corner cell).
pub fn matrix_to_csv(matrix: &RawMatrix) -> String {
    let mut out = String::new();
    let mut header = vec![String::new()];
    header.extend(matrix.labels.iter().cloned());
    out.push_str(&header.join(","));
    out.push('\n');
    for (label, row) in matrix.labels.iter().zip(&matrix.entries) {
        out.push_str(label);
        for x in row {
            out.push(',');
            out.push_str(if *x != 0.0 { "1" } else { "0" });
        }
        out.push('\n');
    }
    out
}
