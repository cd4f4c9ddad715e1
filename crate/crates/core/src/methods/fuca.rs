//! Weighted rank-sum ranking.
//!
//! Each criterion column is ranked on its own (rank 1 to the best value
//! under that criterion's direction), the per-criterion ranks are
//! combined into a weighted sum per alternative, and the smallest sum
//! wins. Because only within-column order matters, the method is
//! insensitive to the scale of the raw data.

use crate::matrix::DecisionMatrix;
use crate::rank::{column_ranks, rank_scores, TiePolicy};

use super::{kahan_sum, Method, MethodError, MethodResult};

/// Ranks the alternatives by weighted rank-sum, smallest first.
///
/// The tie policy applies twice: to the per-criterion column ranking and
/// to the final score ranking.
pub fn fuca(matrix: &DecisionMatrix, policy: TiePolicy) -> Result<MethodResult, MethodError> {
    let table = column_ranks(matrix, policy)?;
    let weights: Vec<f64> = matrix.criteria().iter().map(|c| c.weight()).collect();

    let m = matrix.alternative_count();
    let scores: Vec<f64> = (0..m)
        .map(|i| kahan_sum(weights.iter().enumerate().map(|(j, &w)| table.rank(i, j) * w)))
        .collect();

    let ranks = rank_scores(&scores, Method::Fuca.canonical_order(), policy)?;
    Ok(MethodResult {
        method: Method::Fuca,
        scores,
        ranks,
    })
}
