//! Decision matrix, criteria and validation.
//!
//! A [`DecisionMatrix`] couples an m×n table of finite values with the
//! alternative names labelling its rows and the [`Criterion`] definitions
//! (name, direction, weight) labelling its columns. Construction goes
//! through [`DecisionMatrix::new`], which rejects anything that violates
//! the structural invariants; [`validate_parts`] exposes the full
//! violation list for diagnostic output.

use std::fmt;

use thiserror::Error;

/// Whether larger or smaller values of a criterion are preferable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Larger is better.
    Benefit,
    /// Smaller is better.
    Cost,
}

impl Direction {
    /// The opposite direction.
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Benefit => Direction::Cost,
            Direction::Cost => Direction::Benefit,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Benefit => write!(f, "benefit"),
            Direction::Cost => write!(f, "cost"),
        }
    }
}

/// A named evaluation dimension with a direction and a positive weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    name: String,
    direction: Direction,
    weight: f64,
}

impl Criterion {
    /// Builds a criterion; the name is trimmed and the weight must be a
    /// finite positive real.
    pub fn new(
        name: impl Into<String>,
        direction: Direction,
        weight: f64,
    ) -> Result<Self, MatrixError> {
        let name = name.into().trim().to_string();
        if name.is_empty() {
            return Err(MatrixError::EmptyName);
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(MatrixError::InvalidWeight { name, weight });
        }
        Ok(Criterion {
            name,
            direction,
            weight,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

/// How serious a validation finding is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    /// The matrix cannot be used at all.
    Fatal,
    /// Usable, but some operations (the normalization-based methods)
    /// will reject it.
    Warning,
}

/// A single validation finding.
#[derive(Debug, Clone)]
pub struct Violation {
    pub severity: Severity,
    pub message: String,
}

/// The full set of findings produced by validation.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when no fatal violation is present.
    pub fn is_ok(&self) -> bool {
        self.violations
            .iter()
            .all(|v| v.severity != Severity::Fatal)
    }

    fn fatal(&mut self, message: String) {
        self.violations.push(Violation {
            severity: Severity::Fatal,
            message,
        });
    }

    fn warning(&mut self, message: String) {
        self.violations.push(Violation {
            severity: Severity::Warning,
            message,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let tag = match v.severity {
                Severity::Fatal => "error",
                Severity::Warning => "warning",
            };
            write!(f, "{}: {}", tag, v.message)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("name must not be empty")]
    EmptyName,
    #[error("criterion {name:?} has invalid weight {weight}; weights must be finite and > 0")]
    InvalidWeight { name: String, weight: f64 },
    #[error("invalid decision matrix:\n{report}")]
    Invalid { report: ValidationReport },
    #[error("expected {expected} {kind}, got {got}")]
    CountMismatch {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
}

/// Validates raw matrix parts and reports every violation found.
///
/// Fatal findings cover the structural invariants (m ≥ 2, n ≥ 1, finite
/// cells, consistent row lengths, unique trimmed names). Non-positive
/// values are reported at warning level: they are legal for the
/// order-based methods but the normalization routines reject them.
pub fn validate_parts(
    alternatives: &[String],
    criteria: &[Criterion],
    rows: &[Vec<f64>],
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let m = alternatives.len();
    let n = criteria.len();

    if m < 2 {
        report.fatal(format!("m >= 2 required, got {m} alternative(s)"));
    }
    if n < 1 {
        report.fatal("n >= 1 required, got 0 criteria".to_string());
    }
    if rows.len() != m {
        report.fatal(format!(
            "row count {} does not match alternative count {m}",
            rows.len()
        ));
    }

    check_unique(alternatives.iter().map(|s| s.as_str()), "alternative", &mut report);
    check_unique(criteria.iter().map(|c| c.name()), "criterion", &mut report);

    for (i, alt) in alternatives.iter().enumerate() {
        if alt.trim().is_empty() {
            report.fatal(format!("alternative {} has an empty name", i + 1));
        }
    }

    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            report.fatal(format!(
                "row {} has {} value(s), expected {n}",
                i + 1,
                row.len()
            ));
            continue;
        }
        for (j, &v) in row.iter().enumerate() {
            if !v.is_finite() {
                report.fatal(format!("non-finite value {v} at cell ({}, {})", i + 1, j + 1));
            } else if v <= 0.0 {
                report.warning(format!(
                    "non-positive value {v} at cell ({}, {}); vector and sum normalization will reject this matrix",
                    i + 1,
                    j + 1
                ));
            }
        }
    }

    report
}

fn check_unique<'a>(
    names: impl Iterator<Item = &'a str>,
    kind: &str,
    report: &mut ValidationReport,
) {
    let mut seen: Vec<&str> = Vec::new();
    for name in names {
        let trimmed = name.trim();
        if seen.contains(&trimmed) {
            report.fatal(format!("duplicate {kind} name {trimmed:?}"));
        } else {
            seen.push(trimmed);
        }
    }
}

/// An immutable m×n decision matrix.
///
/// Row order follows the alternative list; column order follows the
/// criterion list. Values are stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<Criterion>,
    values: Vec<f64>,
}

impl DecisionMatrix {
    /// Builds a matrix, trimming names and enforcing every structural
    /// invariant. Warnings (non-positive cells) do not block construction.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<Criterion>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self, MatrixError> {
        let alternatives: Vec<String> =
            alternatives.into_iter().map(|s| s.trim().to_string()).collect();
        let report = validate_parts(&alternatives, &criteria, &rows);
        if !report.is_ok() {
            return Err(MatrixError::Invalid { report });
        }
        let values = rows.into_iter().flatten().collect();
        Ok(DecisionMatrix {
            alternatives,
            criteria,
            values,
        })
    }

    /// Number of alternatives (rows).
    pub fn alternative_count(&self) -> usize {
        self.alternatives.len()
    }

    /// Number of criteria (columns).
    pub fn criterion_count(&self) -> usize {
        self.criteria.len()
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    /// Cell value for alternative `i`, criterion `j` (0-based).
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.criteria.len() + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.criteria.len();
        &self.values[i * n..(i + 1) * n]
    }

    /// Column `j` collected into a vector.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.alternatives.len()).map(|i| self.value(i, j)).collect()
    }

    /// Re-runs validation on this matrix; fatal findings are impossible
    /// here by construction, but warnings (non-positive cells) survive.
    pub fn validate(&self) -> ValidationReport {
        let rows: Vec<Vec<f64>> = (0..self.alternative_count())
            .map(|i| self.row(i).to_vec())
            .collect();
        validate_parts(&self.alternatives, &self.criteria, &rows)
    }

    /// Returns a copy of this matrix with every criterion direction
    /// replaced. The list length must match the criterion count.
    pub fn with_directions(&self, directions: &[Direction]) -> Result<Self, MatrixError> {
        if directions.len() != self.criteria.len() {
            return Err(MatrixError::CountMismatch {
                kind: "directions",
                expected: self.criteria.len(),
                got: directions.len(),
            });
        }
        let criteria = self
            .criteria
            .iter()
            .zip(directions)
            .map(|(c, &d)| Criterion::new(c.name(), d, c.weight()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DecisionMatrix {
            alternatives: self.alternatives.clone(),
            criteria,
            values: self.values.clone(),
        })
    }

    /// Returns a copy of this matrix with every criterion weight
    /// replaced. The list length must match the criterion count.
    pub fn with_weights(&self, weights: &[f64]) -> Result<Self, MatrixError> {
        if weights.len() != self.criteria.len() {
            return Err(MatrixError::CountMismatch {
                kind: "weights",
                expected: self.criteria.len(),
                got: weights.len(),
            });
        }
        let criteria = self
            .criteria
            .iter()
            .zip(weights)
            .map(|(c, &w)| Criterion::new(c.name(), c.direction(), w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DecisionMatrix {
            alternatives: self.alternatives.clone(),
            criteria,
            values: self.values.clone(),
        })
    }

    /// Returns a copy with the rows permuted: row `i` of the result is
    /// row `perm[i]` of the original.
    pub fn permuted_rows(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        if perm.len() != self.alternative_count() {
            return Err(MatrixError::CountMismatch {
                kind: "permutation entries",
                expected: self.alternative_count(),
                got: perm.len(),
            });
        }
        let alternatives = perm.iter().map(|&i| self.alternatives[i].clone()).collect();
        let rows = perm.iter().map(|&i| self.row(i).to_vec()).collect();
        DecisionMatrix::new(alternatives, self.criteria.clone(), rows)
    }
}
