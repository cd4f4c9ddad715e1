//! Decision-matrix and reference-ranking ingestion, plus the embedded
//! bank case-study fixtures.
//!
//! The matrix format is plain UTF-8 CSV with header
//! `alternative,<crit1>,...,<critN>`; each following row is a name and N
//! numeric cells. The reference format uses header `alternative,rank`.
//! Numeric cells must match `[-]?digits[.digits]?` — no exponents, no
//! thousands separators, decimal point only — so loading is independent
//! of locale. Cell whitespace is trimmed, line endings may be LF or
//! CRLF, and blank lines at the end of the file are ignored.
//!
//! Directions and weights are not part of the matrix file; loaded
//! matrices default to cost criteria (the safe choice for rank-valued
//! data, where smaller is better) with equal weights, and callers
//! override via [`DecisionMatrix::with_directions`] /
//! [`DecisionMatrix::with_weights`].

use std::io::Read;

use thiserror::Error;

use crate::matrix::{Criterion, DecisionMatrix, Direction, MatrixError};
use crate::rank::{RankError, RankVector};

const BANKS_CSV: &str = include_str!("../data/banks.csv");
const CAMELS_CSV: &str = include_str!("../data/camels.csv");

/// Source label used by [`builtin_bank_dataset`].
pub const BUILTIN_BANKS: &str = "builtin:banks";
/// Source label used by [`builtin_camels_reference`].
pub const BUILTIN_CAMELS: &str = "builtin:camels";

/// A decision matrix together with where it came from.
#[derive(Debug, Clone)]
pub struct MatrixDocument {
    pub matrix: DecisionMatrix,
    pub source: String,
}

/// A named reference ranking (for example a published benchmark column).
#[derive(Debug, Clone)]
pub struct ReferenceRanking {
    pub names: Vec<String>,
    pub ranks: RankVector,
    pub label: String,
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("failed to read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("empty body: no data rows after the header")]
    EmptyBody,
    #[error("bad header: expected {expected:?}, got {got:?}")]
    BadHeader { expected: String, got: String },
    #[error("line {line} has {got} cell(s), expected {expected}")]
    Ragged {
        line: usize,
        got: usize,
        expected: usize,
    },
    #[error("non-numeric cell {cell:?} at line {line}, column {column}")]
    NonNumeric {
        line: usize,
        column: usize,
        cell: String,
    },
    #[error("duplicate alternative name {name:?} at line {line}")]
    DuplicateName { name: String, line: usize },
    #[error("rank {value} at line {line} is invalid; ranks must be >= 1")]
    RankOutOfRange { line: usize, value: f64 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Rank(#[from] RankError),
}

/// Checks a cell against the numeric grammar `[-]?digits[.digits]?` and
/// parses it. Exponent notation, `inf`, `nan`, leading `+` and bare
/// `.5` / `5.` forms are all rejected.
fn parse_number(cell: &str) -> Option<f64> {
    let unsigned = cell.strip_prefix('-').unwrap_or(cell);
    let (int_part, frac_part) = match unsigned.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (unsigned, None),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if let Some(frac) = frac_part {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
    }
    cell.parse().ok()
}

/// Splits CSV text into trimmed cell rows, dropping blank lines at the
/// end of the file. Line numbers are 1-based and count the header.
fn rows_of(text: &str) -> Vec<(usize, Vec<String>)> {
    let mut rows: Vec<(usize, Vec<String>)> = text
        .split('\n')
        .enumerate()
        .map(|(idx, line)| {
            let line = line.strip_suffix('\r').unwrap_or(line);
            let cells = line.split(',').map(|c| c.trim().to_string()).collect();
            (idx + 1, cells)
        })
        .collect();
    while let Some((_, cells)) = rows.last() {
        if cells.len() == 1 && cells[0].is_empty() {
            rows.pop();
        } else {
            break;
        }
    }
    rows
}

fn read_text(mut source: impl Read) -> Result<String, DatasetError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    String::from_utf8(bytes).map_err(|_| DatasetError::NotUtf8)
}

/// Loads a decision matrix from CSV text.
pub fn parse_matrix_csv(text: &str, source: &str) -> Result<MatrixDocument, DatasetError> {
    let rows = rows_of(text);
    let Some((_, header)) = rows.first() else {
        return Err(DatasetError::EmptyBody);
    };
    if header.len() < 2 || header[0] != "alternative" {
        return Err(DatasetError::BadHeader {
            expected: "alternative,<crit1>,...".to_string(),
            got: header.join(","),
        });
    }
    let n = header.len() - 1;
    let criterion_names: Vec<String> = header[1..].to_vec();

    let data_rows = &rows[1..];
    if data_rows.is_empty() {
        return Err(DatasetError::EmptyBody);
    }

    let mut alternatives = Vec::with_capacity(data_rows.len());
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(data_rows.len());
    for (line, cells) in data_rows {
        if cells.len() != n + 1 {
            return Err(DatasetError::Ragged {
                line: *line,
                got: cells.len(),
                expected: n + 1,
            });
        }
        let mut row = Vec::with_capacity(n);
        for (k, cell) in cells[1..].iter().enumerate() {
            let value = parse_number(cell).ok_or_else(|| DatasetError::NonNumeric {
                line: *line,
                column: k + 2,
                cell: cell.clone(),
            })?;
            row.push(value);
        }
        alternatives.push(cells[0].clone());
        values.push(row);
    }

    let weight = 1.0 / n as f64;
    let criteria = criterion_names
        .into_iter()
        .map(|name| Criterion::new(name, Direction::Cost, weight))
        .collect::<Result<Vec<_>, _>>()?;

    let matrix = DecisionMatrix::new(alternatives, criteria, values)?;
    Ok(MatrixDocument {
        matrix,
        source: source.to_string(),
    })
}

/// Loads a decision matrix from a byte stream.
pub fn load_matrix_csv(source: impl Read, origin: &str) -> Result<MatrixDocument, DatasetError> {
    parse_matrix_csv(&read_text(source)?, origin)
}

/// Loads a reference ranking from CSV text.
pub fn parse_reference_csv(text: &str, label: &str) -> Result<ReferenceRanking, DatasetError> {
    let rows = rows_of(text);
    let Some((_, header)) = rows.first() else {
        return Err(DatasetError::EmptyBody);
    };
    if header.len() != 2 || header[0] != "alternative" || header[1] != "rank" {
        return Err(DatasetError::BadHeader {
            expected: "alternative,rank".to_string(),
            got: header.join(","),
        });
    }

    let data_rows = &rows[1..];
    if data_rows.is_empty() {
        return Err(DatasetError::EmptyBody);
    }

    let mut names: Vec<String> = Vec::with_capacity(data_rows.len());
    let mut ranks = Vec::with_capacity(data_rows.len());
    for (line, cells) in data_rows {
        if cells.len() != 2 {
            return Err(DatasetError::Ragged {
                line: *line,
                got: cells.len(),
                expected: 2,
            });
        }
        let name = cells[0].clone();
        if names.contains(&name) {
            return Err(DatasetError::DuplicateName { name, line: *line });
        }
        let value = parse_number(&cells[1]).ok_or_else(|| DatasetError::NonNumeric {
            line: *line,
            column: 2,
            cell: cells[1].clone(),
        })?;
        if value < 1.0 {
            return Err(DatasetError::RankOutOfRange {
                line: *line,
                value,
            });
        }
        names.push(name);
        ranks.push(value);
    }

    Ok(ReferenceRanking {
        names,
        ranks: RankVector::from_ranks(ranks)?,
        label: label.to_string(),
    })
}

/// Loads a reference ranking from a byte stream.
pub fn load_reference_csv(
    source: impl Read,
    label: &str,
) -> Result<ReferenceRanking, DatasetError> {
    parse_reference_csv(&read_text(source)?, label)
}

/// Serializes a matrix back to the CSV format accepted by
/// [`load_matrix_csv`]. Values use the shortest decimal form that
/// round-trips, so reloading reproduces the matrix exactly.
pub fn matrix_to_csv(matrix: &DecisionMatrix) -> String {
    let mut out = String::from("alternative");
    for criterion in matrix.criteria() {
        out.push(',');
        out.push_str(criterion.name());
    }
    out.push('\n');
    for (i, name) in matrix.alternatives().iter().enumerate() {
        out.push_str(name);
        for j in 0..matrix.criterion_count() {
            out.push(',');
            out.push_str(&matrix.value(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

/// The 30-bank case-study matrix: six indicator-rank columns per bank,
/// smaller rank meaning a stronger indicator. Criteria default to cost
/// direction with equal weights.
pub fn builtin_bank_dataset() -> MatrixDocument {
    parse_matrix_csv(BANKS_CSV, BUILTIN_BANKS).expect("embedded bank dataset is valid")
}

/// The CAMELS benchmark ranking of the same 30 banks.
pub fn builtin_camels_reference() -> ReferenceRanking {
    parse_reference_csv(CAMELS_CSV, "CAMELS").expect("embedded CAMELS reference is valid")
}
