//! Ratio-analysis ranking over weighted vector-normalized values.

use crate::matrix::{DecisionMatrix, Direction};
use crate::normalize::{apply_weights, vector_normalize};
use crate::rank::{rank_scores, TiePolicy};

use super::{Method, MethodError, MethodResult};

/// Per-alternative terms of the MOORA score.
///
/// `score[i]` is exactly `benefit_avg[i] - cost_avg[i]`; an empty benefit
/// or cost criterion set contributes 0 to the corresponding term.
#[derive(Debug, Clone)]
pub struct MooraIntermediates {
    /// Mean weighted normalized value over the benefit criteria.
    pub benefit_avg: Vec<f64>,
    /// Mean weighted normalized value over the cost criteria.
    pub cost_avg: Vec<f64>,
    /// Final score: benefit average minus cost average.
    pub score: Vec<f64>,
}

/// Computes the MOORA terms without ranking.
pub fn moora_intermediates(matrix: &DecisionMatrix) -> Result<MooraIntermediates, MethodError> {
    let normalized = vector_normalize(matrix)?;
    let weighted = apply_weights(&normalized, matrix.criteria())?;

    let benefit_cols: Vec<usize> = matrix
        .criteria()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.direction() == Direction::Benefit)
        .map(|(j, _)| j)
        .collect();
    let cost_cols: Vec<usize> = matrix
        .criteria()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.direction() == Direction::Cost)
        .map(|(j, _)| j)
        .collect();

    let m = matrix.alternative_count();
    let mut benefit_avg = Vec::with_capacity(m);
    let mut cost_avg = Vec::with_capacity(m);
    let mut score = Vec::with_capacity(m);
    for i in 0..m {
        let p = column_mean(&weighted, i, &benefit_cols);
        let r = column_mean(&weighted, i, &cost_cols);
        benefit_avg.push(p);
        cost_avg.push(r);
        score.push(p - r);
    }

    Ok(MooraIntermediates {
        benefit_avg,
        cost_avg,
        score,
    })
}

fn column_mean(weighted: &crate::normalize::WeightedMatrix, i: usize, cols: &[usize]) -> f64 {
    if cols.is_empty() {
        return 0.0;
    }
    let mut sum = 0.0;
    for &j in cols {
        sum += weighted.value(i, j);
    }
    sum / cols.len() as f64
}

/// Ranks the alternatives by MOORA score, highest first.
pub fn moora(matrix: &DecisionMatrix, policy: TiePolicy) -> Result<MethodResult, MethodError> {
    let intermediates = moora_intermediates(matrix)?;
    let ranks = rank_scores(
        &intermediates.score,
        Method::Moora.canonical_order(),
        policy,
    )?;
    Ok(MethodResult {
        method: Method::Moora,
        scores: intermediates.score,
        ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Criterion;

    #[test]
    fn two_by_one_benefit() {
        // Denominator is sqrt(1^2 + 2^2) = sqrt(5).
        let m = DecisionMatrix::new(
            vec!["a".into(), "b".into()],
            vec![Criterion::new("c1", Direction::Benefit, 1.0).unwrap()],
            vec![vec![1.0], vec![2.0]],
        )
        .unwrap();
        let result = moora(&m, TiePolicy::Competition).unwrap();
        assert!((result.scores[0] - 0.44721_35955).abs() < 1e-9);
        assert!((result.scores[1] - 0.89442_71910).abs() < 1e-9);
        assert_eq!(result.ranks.as_slice(), &[2.0, 1.0]);
    }

    #[test]
    fn identical_rows_tie() {
        let m = DecisionMatrix::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Criterion::new("c1", Direction::Benefit, 0.4).unwrap(),
                Criterion::new("c2", Direction::Cost, 0.6).unwrap(),
            ],
            vec![vec![2.0, 5.0], vec![2.0, 5.0], vec![1.0, 9.0]],
        )
        .unwrap();
        let result = moora(&m, TiePolicy::Competition).unwrap();
        assert_eq!(result.scores[0], result.scores[1]);
        assert_eq!(result.ranks[0], result.ranks[1]);
    }

    #[test]
    fn score_is_exact_difference_of_terms() {
        let m = DecisionMatrix::new(
            vec!["a".into(), "b".into()],
            vec![
                Criterion::new("c1", Direction::Benefit, 0.5).unwrap(),
                Criterion::new("c2", Direction::Cost, 0.5).unwrap(),
            ],
            vec![vec![1.0, 4.0], vec![2.0, 3.0]],
        )
        .unwrap();
        let inter = moora_intermediates(&m).unwrap();
        for i in 0..2 {
            assert_eq!(inter.score[i], inter.benefit_avg[i] - inter.cost_avg[i]);
        }
    }

    #[test]
    fn all_benefit_leaves_cost_term_zero() {
        let m = DecisionMatrix::new(
            vec!["a".into(), "b".into()],
            vec![Criterion::new("c1", Direction::Benefit, 1.0).unwrap()],
            vec![vec![1.0], vec![2.0]],
        )
        .unwrap();
        let inter = moora_intermediates(&m).unwrap();
        assert_eq!(inter.cost_avg, vec![0.0, 0.0]);
    }
}
