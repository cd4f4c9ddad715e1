//! Score-to-rank conversion with explicit tie handling.
//!
//! Ranks are kept as `f64` throughout so that the averaged policy can
//! express exact halves; competition and ordinal ranks are always
//! integral.

use std::cmp::Ordering;

use thiserror::Error;

use crate::matrix::{DecisionMatrix, Direction};

/// How tied scores are converted into ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Tied items share the minimum rank; the next distinct rank jumps
    /// by the size of the tied group (1-2-2-4 style).
    #[default]
    Competition,
    /// Ties broken by input order: the earlier row gets the smaller rank.
    Ordinal,
    /// Tied items share the mean of the ranks they span (may be a half).
    Average,
}

impl TiePolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            TiePolicy::Competition => "competition",
            TiePolicy::Ordinal => "ordinal",
            TiePolicy::Average => "average",
        }
    }
}

/// Which end of the score scale receives rank 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOrder {
    /// Smallest score is best (rank 1).
    Ascending,
    /// Largest score is best (rank 1).
    Descending,
}

#[derive(Debug, Error)]
pub enum RankError {
    #[error("cannot rank an empty score list")]
    Empty,
    #[error("non-finite score {value} at index {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("rank vectors must have equal lengths; got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("rank {value} at index {index} is invalid; ranks must be finite and >= 1")]
    InvalidRank { index: usize, value: f64 },
}

/// A rank per alternative, aligned to the input order.
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector(Vec<f64>);

impl RankVector {
    /// Wraps pre-existing ranks (e.g. a loaded reference column),
    /// checking only that each entry is finite and at least 1.
    pub fn from_ranks(ranks: Vec<f64>) -> Result<Self, RankError> {
        if ranks.is_empty() {
            return Err(RankError::Empty);
        }
        for (index, &value) in ranks.iter().enumerate() {
            if !value.is_finite() || value < 1.0 {
                return Err(RankError::InvalidRank { index, value });
            }
        }
        Ok(RankVector(ranks))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    /// True when every rank is an integer (always the case under the
    /// competition and ordinal policies).
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|r| r.fract() == 0.0)
    }
}

impl std::ops::Index<usize> for RankVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Ranks a score list: the best score under `order` receives rank 1 and
/// ties are resolved per `policy`. Output is aligned to the input order.
pub fn rank_scores(
    scores: &[f64],
    order: RankOrder,
    policy: TiePolicy,
) -> Result<RankVector, RankError> {
    if scores.is_empty() {
        return Err(RankError::Empty);
    }
    for (index, &value) in scores.iter().enumerate() {
        if !value.is_finite() {
            return Err(RankError::NonFinite { index, value });
        }
    }

    let m = scores.len();
    let mut idx: Vec<usize> = (0..m).collect();
    // Stable sort keeps input order inside tied groups, which is exactly
    // the ordinal tie break.
    idx.sort_by(|&a, &b| compare(scores[a], scores[b], order));

    let mut ranks = vec![0.0; m];
    let mut start = 0;
    while start < m {
        let mut end = start + 1;
        while end < m && scores[idx[end]] == scores[idx[start]] {
            end += 1;
        }
        for (offset, &original) in idx[start..end].iter().enumerate() {
            ranks[original] = match policy {
                TiePolicy::Competition => (start + 1) as f64,
                TiePolicy::Ordinal => (start + offset + 1) as f64,
                // Mean of 1-based positions start+1 ..= end; exact
                // halves because the numerator is an integer.
                TiePolicy::Average => (start + end + 1) as f64 / 2.0,
            };
        }
        start = end;
    }

    Ok(RankVector(ranks))
}

fn compare(a: f64, b: f64, order: RankOrder) -> Ordering {
    // Finiteness was checked up front, so partial_cmp cannot fail.
    let cmp = a.partial_cmp(&b).expect("scores are finite");
    match order {
        RankOrder::Ascending => cmp,
        RankOrder::Descending => cmp.reverse(),
    }
}

/// Per-criterion ranks of every alternative: column `j` holds the ranks
/// of the m alternatives under criterion `j` alone, rank 1 going to the
/// best value under that criterion's direction.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    columns: Vec<RankVector>,
}

impl RankTable {
    /// Rank of alternative `i` under criterion `j`.
    pub fn rank(&self, i: usize, j: usize) -> f64 {
        self.columns[j][i]
    }

    pub fn column(&self, j: usize) -> &RankVector {
        &self.columns[j]
    }

    pub fn criterion_count(&self) -> usize {
        self.columns.len()
    }
}

/// Ranks the alternatives within each criterion column. Benefit columns
/// give rank 1 to the largest value, cost columns to the smallest.
pub fn column_ranks(matrix: &DecisionMatrix, policy: TiePolicy) -> Result<RankTable, RankError> {
    let columns = matrix
        .criteria()
        .iter()
        .enumerate()
        .map(|(j, criterion)| {
            let order = match criterion.direction() {
                Direction::Benefit => RankOrder::Descending,
                Direction::Cost => RankOrder::Ascending,
            };
            rank_scores(&matrix.column(j), order, policy)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RankTable { columns })
}
