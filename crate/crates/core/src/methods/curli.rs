//! Pairwise-comparison ranking.
//!
//! Within each criterion, every ordered pair of alternatives contributes
//! +1, -1 or 0 to the row alternative's score depending on whether its
//! value beats, loses to or equals the other's under the criterion's
//! direction. An alternative's total over all criteria is its score;
//! the most negative total ranks first. Criterion weights play no part.

use std::cmp::Ordering;

use crate::matrix::{DecisionMatrix, Direction};
use crate::rank::{rank_scores, TiePolicy};

use super::{Method, MethodError, MethodResult};

/// Net pairwise score of each alternative under each criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurliScoreTable {
    // net[j][i]: net pairwise score of alternative i under criterion j.
    net: Vec<Vec<i64>>,
}

impl CurliScoreTable {
    /// Net pairwise score of alternative `i` under criterion `j`.
    pub fn net_score(&self, i: usize, j: usize) -> i64 {
        self.net[j][i]
    }

    pub fn criterion_count(&self) -> usize {
        self.net.len()
    }

    /// Sum of the net scores within criterion `j`; zero for every column
    /// by pairwise antisymmetry.
    pub fn column_sum(&self, j: usize) -> i64 {
        self.net[j].iter().sum()
    }

    /// Total score of alternative `i` over all criteria.
    pub fn total(&self, i: usize) -> i64 {
        self.net.iter().map(|column| column[i]).sum()
    }
}

/// Computes the pairwise score table.
///
/// Per criterion, the alternatives are sorted once and each tied group
/// is scored from its position: with `less` values strictly worse and
/// `greater` strictly better, the net score is `less - greater` for a
/// benefit criterion and its negation for a cost criterion.
pub fn curli_score_table(matrix: &DecisionMatrix) -> CurliScoreTable {
    let m = matrix.alternative_count();
    let net = matrix
        .criteria()
        .iter()
        .enumerate()
        .map(|(j, criterion)| {
            let column = matrix.column(j);
            let mut idx: Vec<usize> = (0..m).collect();
            idx.sort_by(|&a, &b| {
                column[a].partial_cmp(&column[b]).unwrap_or(Ordering::Equal)
            });

            let mut scores = vec![0i64; m];
            let mut start = 0;
            while start < m {
                let mut end = start + 1;
                while end < m && column[idx[end]] == column[idx[start]] {
                    end += 1;
                }
                let smaller = start as i64;
                let larger = (m - end) as i64;
                let net = match criterion.direction() {
                    Direction::Benefit => smaller - larger,
                    Direction::Cost => larger - smaller,
                };
                for &original in &idx[start..end] {
                    scores[original] = net;
                }
                start = end;
            }
            scores
        })
        .collect();
    CurliScoreTable { net }
}

/// Ranks the alternatives by total pairwise score, most negative first.
pub fn curli(matrix: &DecisionMatrix, policy: TiePolicy) -> Result<MethodResult, MethodError> {
    let table = curli_score_table(matrix);
    let scores: Vec<f64> = (0..matrix.alternative_count())
        .map(|i| table.total(i) as f64)
        .collect();
    let ranks = rank_scores(&scores, Method::Curli.canonical_order(), policy)?;
    Ok(MethodResult {
        method: Method::Curli,
        scores,
        ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Criterion;

    fn benefit_matrix(rows: Vec<Vec<f64>>) -> DecisionMatrix {
        let n = rows[0].len();
        let criteria = (0..n)
            .map(|j| Criterion::new(format!("c{}", j + 1), Direction::Benefit, 1.0).unwrap())
            .collect();
        let alternatives = (0..rows.len()).map(|i| format!("a{}", i + 1)).collect();
        DecisionMatrix::new(alternatives, criteria, rows).unwrap()
    }

    #[test]
    fn equal_pair_scores_zero() {
        let m = benefit_matrix(vec![vec![5.0], vec![5.0]]);
        let result = curli(&m, TiePolicy::Competition).unwrap();
        assert_eq!(result.scores, vec![0.0, 0.0]);
        assert_eq!(result.ranks.as_slice(), &[1.0, 1.0]);
    }

    #[test]
    fn totals_sum_to_zero() {
        let m = benefit_matrix(vec![
            vec![3.0, 1.0, 4.0],
            vec![1.0, 5.0, 9.0],
            vec![2.0, 6.0, 5.0],
            vec![3.0, 5.0, 8.0],
        ]);
        let table = curli_score_table(&m);
        for j in 0..table.criterion_count() {
            assert_eq!(table.column_sum(j), 0);
        }
        let total: i64 = (0..4).map(|i| table.total(i)).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn cost_direction_negates_benefit_scores() {
        let rows = vec![vec![3.0, 7.0], vec![1.0, 7.0], vec![2.0, 5.0]];
        let benefit = benefit_matrix(rows.clone());
        let cost = benefit
            .with_directions(&[Direction::Cost, Direction::Cost])
            .unwrap();
        let b = curli_score_table(&benefit);
        let c = curli_score_table(&cost);
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(b.net_score(i, j), -c.net_score(i, j));
            }
        }
    }

    #[test]
    fn three_way_strict_order() {
        let m = benefit_matrix(vec![vec![1.0], vec![2.0], vec![3.0]]);
        let table = curli_score_table(&m);
        assert_eq!(table.net_score(0, 0), -2);
        assert_eq!(table.net_score(1, 0), 0);
        assert_eq!(table.net_score(2, 0), 2);
    }
}
