//! Column normalization and weight application.
//!
//! Two schemes are supported: vector normalization (each column divided
//! by its Euclidean norm, so the normalized column has unit norm) and
//! sum normalization (each column divided by its sum, so the normalized
//! column sums to 1). Both require nonnegative input with at least one
//! strictly positive entry per column; negative data has no sanctioned
//! meaning under either scheme and is rejected rather than silently
//! accepted.
//!
//! Column statistics are accumulated in plain row-index order with no
//! pairwise or compensated summation, so results are reproducible from
//! the definition alone.

use thiserror::Error;

use crate::matrix::{Criterion, DecisionMatrix};

/// Which scheme produced a normalized matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormScheme {
    /// Unit Euclidean column norm.
    Vector,
    /// Unit column sum.
    Sum,
}

#[derive(Debug, Error)]
pub enum NormalizeError {
    #[error("negative value {value} at cell ({row}, {col}) in criterion {criterion:?}; normalization requires nonnegative data")]
    NegativeValue {
        row: usize,
        col: usize,
        criterion: String,
        value: f64,
    },
    #[error("criterion {criterion:?} is all zeros; vector normalization is undefined")]
    AllZeroColumn { criterion: String },
    #[error("criterion {criterion:?} has column sum {sum}; sum normalization requires a strictly positive sum")]
    NonPositiveColumnSum { criterion: String, sum: f64 },
    #[error("expected {expected} criteria, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A column-normalized copy of a decision matrix.
#[derive(Debug, Clone)]
pub struct NormalizedMatrix {
    values: Vec<f64>,
    rows: usize,
    cols: usize,
    scheme: NormScheme,
}

impl NormalizedMatrix {
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn column_count(&self) -> usize {
        self.cols
    }

    pub fn scheme(&self) -> NormScheme {
        self.scheme
    }
}

/// A normalized matrix with criterion weights applied cellwise.
#[derive(Debug, Clone)]
pub struct WeightedMatrix {
    values: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl WeightedMatrix {
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn column_count(&self) -> usize {
        self.cols
    }
}

fn check_nonnegative(matrix: &DecisionMatrix) -> Result<(), NormalizeError> {
    for i in 0..matrix.alternative_count() {
        for (j, criterion) in matrix.criteria().iter().enumerate() {
            let value = matrix.value(i, j);
            if value < 0.0 {
                return Err(NormalizeError::NegativeValue {
                    row: i + 1,
                    col: j + 1,
                    criterion: criterion.name().to_string(),
                    value,
                });
            }
        }
    }
    Ok(())
}

/// Divides every column by its Euclidean norm.
pub fn vector_normalize(matrix: &DecisionMatrix) -> Result<NormalizedMatrix, NormalizeError> {
    check_nonnegative(matrix)?;
    let rows = matrix.alternative_count();
    let cols = matrix.criterion_count();

    let mut norms = Vec::with_capacity(cols);
    for (j, criterion) in matrix.criteria().iter().enumerate() {
        let mut sum_sq = 0.0;
        for i in 0..rows {
            let v = matrix.value(i, j);
            sum_sq += v * v;
        }
        if sum_sq == 0.0 {
            return Err(NormalizeError::AllZeroColumn {
                criterion: criterion.name().to_string(),
            });
        }
        norms.push(sum_sq.sqrt());
    }

    let mut values = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for (j, norm) in norms.iter().enumerate() {
            values.push(matrix.value(i, j) / norm);
        }
    }
    Ok(NormalizedMatrix {
        values,
        rows,
        cols,
        scheme: NormScheme::Vector,
    })
}

/// Divides every column by its sum.
pub fn sum_normalize(matrix: &DecisionMatrix) -> Result<NormalizedMatrix, NormalizeError> {
    check_nonnegative(matrix)?;
    let rows = matrix.alternative_count();
    let cols = matrix.criterion_count();

    let mut sums = Vec::with_capacity(cols);
    for (j, criterion) in matrix.criteria().iter().enumerate() {
        let mut sum = 0.0;
        for i in 0..rows {
            sum += matrix.value(i, j);
        }
        if sum <= 0.0 {
            return Err(NormalizeError::NonPositiveColumnSum {
                criterion: criterion.name().to_string(),
                sum,
            });
        }
        sums.push(sum);
    }

    let mut values = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for (j, sum) in sums.iter().enumerate() {
            values.push(matrix.value(i, j) / sum);
        }
    }
    Ok(NormalizedMatrix {
        values,
        rows,
        cols,
        scheme: NormScheme::Sum,
    })
}

/// Multiplies each normalized cell by its criterion's weight.
pub fn apply_weights(
    normalized: &NormalizedMatrix,
    criteria: &[Criterion],
) -> Result<WeightedMatrix, NormalizeError> {
    if criteria.len() != normalized.column_count() {
        return Err(NormalizeError::DimensionMismatch {
            expected: normalized.column_count(),
            got: criteria.len(),
        });
    }
    let rows = normalized.row_count();
    let cols = normalized.column_count();
    let mut values = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for (j, criterion) in criteria.iter().enumerate() {
            values.push(criterion.weight() * normalized.value(i, j));
        }
    }
    Ok(WeightedMatrix { values, rows, cols })
}
