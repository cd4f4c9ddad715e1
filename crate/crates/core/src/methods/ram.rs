//! Root-assessment ranking over weighted sum-normalized values.

use crate::matrix::{DecisionMatrix, Direction};
use crate::normalize::{apply_weights, sum_normalize};
use crate::rank::{rank_scores, TiePolicy};

use super::{Method, MethodError, MethodResult};

/// Per-alternative totals of the RAM score.
#[derive(Debug, Clone)]
pub struct RamIntermediates {
    /// Sum of weighted normalized values over the benefit criteria.
    pub benefit_total: Vec<f64>,
    /// Sum of weighted normalized values over the cost criteria.
    pub cost_total: Vec<f64>,
    /// Final score: `root_score(benefit_total, cost_total)`.
    pub score: Vec<f64>,
}

/// The RAM scoring function: `(2 + benefit)^(1 / (2 + cost))`.
///
/// With empty benefit and cost sets this degenerates to 2^(1/2).
pub fn root_score(benefit_total: f64, cost_total: f64) -> f64 {
    (2.0 + benefit_total).powf(1.0 / (2.0 + cost_total))
}

/// Computes the RAM totals and scores without ranking.
pub fn ram_intermediates(matrix: &DecisionMatrix) -> Result<RamIntermediates, MethodError> {
    let normalized = sum_normalize(matrix)?;
    let weighted = apply_weights(&normalized, matrix.criteria())?;

    let m = matrix.alternative_count();
    let mut benefit_total = Vec::with_capacity(m);
    let mut cost_total = Vec::with_capacity(m);
    let mut score = Vec::with_capacity(m);
    for i in 0..m {
        let mut plus = 0.0;
        let mut minus = 0.0;
        for (j, criterion) in matrix.criteria().iter().enumerate() {
            match criterion.direction() {
                Direction::Benefit => plus += weighted.value(i, j),
                Direction::Cost => minus += weighted.value(i, j),
            }
        }
        benefit_total.push(plus);
        cost_total.push(minus);
        score.push(root_score(plus, minus));
    }

    Ok(RamIntermediates {
        benefit_total,
        cost_total,
        score,
    })
}

/// Ranks the alternatives by RAM score, highest first.
pub fn ram(matrix: &DecisionMatrix, policy: TiePolicy) -> Result<MethodResult, MethodError> {
    let intermediates = ram_intermediates(matrix)?;
    let ranks = rank_scores(&intermediates.score, Method::Ram.canonical_order(), policy)?;
    Ok(MethodResult {
        method: Method::Ram,
        scores: intermediates.score,
        ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Criterion;

    #[test]
    fn empty_totals_give_sqrt_two() {
        assert!((root_score(0.0, 0.0) - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn identical_rows_tie() {
        let m = DecisionMatrix::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Criterion::new("c1", Direction::Benefit, 0.5).unwrap(),
                Criterion::new("c2", Direction::Cost, 0.5).unwrap(),
            ],
            vec![vec![3.0, 2.0], vec![3.0, 2.0], vec![1.0, 5.0]],
        )
        .unwrap();
        let result = ram(&m, TiePolicy::Competition).unwrap();
        assert_eq!(result.scores[0], result.scores[1]);
        assert_eq!(result.ranks[0], result.ranks[1]);
    }

    #[test]
    fn totals_are_nonnegative_and_split_by_direction() {
        let m = DecisionMatrix::new(
            vec!["a".into(), "b".into()],
            vec![
                Criterion::new("c1", Direction::Benefit, 0.5).unwrap(),
                Criterion::new("c2", Direction::Cost, 0.5).unwrap(),
            ],
            vec![vec![1.0, 4.0], vec![2.0, 3.0]],
        )
        .unwrap();
        let inter = ram_intermediates(&m).unwrap();
        for i in 0..2 {
            assert!(inter.benefit_total[i] >= 0.0);
            assert!(inter.cost_total[i] >= 0.0);
            assert_eq!(
                inter.score[i],
                root_score(inter.benefit_total[i], inter.cost_total[i])
            );
        }
    }
}
