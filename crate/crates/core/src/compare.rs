//! Rank-vector comparison.
//!
//! Two Spearman coefficients are computed side by side. The naive form
//! `1 - 6*sum(D^2) / (m*(m^2-1))` assumes both inputs are tie-free
//! permutations of 1..m and can leave [-1, 1] when they are not; the
//! tie-adjusted form is the Pearson product-moment correlation of the
//! two rank vectors and is always in [-1, 1]. Reporting both makes the
//! effect of ties visible instead of silently correcting for it.

use thiserror::Error;

use crate::rank::RankVector;

#[derive(Debug, Error)]
pub enum CompareError {
    #[error("rank vectors must have equal lengths; got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("rank correlation requires at least 2 items, got {0}")]
    TooShort(usize),
    #[error("tie-adjusted correlation is undefined for a constant rank vector")]
    ConstantVector,
}

/// Agreement statistics between two rank vectors.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub spearman_naive: f64,
    pub spearman_tie_adjusted: f64,
    /// Number of positions with exactly equal ranks.
    pub exact_matches: usize,
    /// Sum of squared rank differences.
    pub sum_sq_diff: f64,
    /// Largest absolute rank difference.
    pub max_abs_diff: f64,
}

fn check_lengths(a: &RankVector, b: &RankVector) -> Result<usize, CompareError> {
    if a.len() != b.len() {
        return Err(CompareError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(CompareError::TooShort(a.len()));
    }
    Ok(a.len())
}

fn sum_sq_diff(a: &RankVector, b: &RankVector) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum()
}

/// The naive Spearman coefficient, computed exactly as defined with no
/// tie correction.
pub fn spearman_naive(a: &RankVector, b: &RankVector) -> Result<f64, CompareError> {
    let m = check_lengths(a, b)? as f64;
    let d2 = sum_sq_diff(a, b);
    Ok(1.0 - 6.0 * d2 / (m * (m * m - 1.0)))
}

/// The tie-safe Spearman coefficient: the Pearson correlation of the two
/// rank vectors, clamped to [-1, 1] to absorb the last-ulp rounding of
/// the quotient.
pub fn spearman_tie_adjusted(a: &RankVector, b: &RankVector) -> Result<f64, CompareError> {
    let m = check_lengths(a, b)? as f64;
    let mean_a = a.iter().sum::<f64>() / m;
    let mean_b = b.iter().sum::<f64>() / m;

    let mut covariance = 0.0;
    let mut var_a = 0.0;
    let mut var_b = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        let dx = x - mean_a;
        let dy = y - mean_b;
        covariance += dx * dy;
        var_a += dx * dx;
        var_b += dy * dy;
    }
    if var_a == 0.0 || var_b == 0.0 {
        return Err(CompareError::ConstantVector);
    }
    Ok((covariance / (var_a.sqrt() * var_b.sqrt())).clamp(-1.0, 1.0))
}

/// Full agreement statistics, embedding both coefficients.
pub fn agreement(a: &RankVector, b: &RankVector) -> Result<ComparisonReport, CompareError> {
    check_lengths(a, b)?;
    let exact_matches = a.iter().zip(b.iter()).filter(|(x, y)| x == y).count();
    let max_abs_diff = a
        .iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(ComparisonReport {
        spearman_naive: spearman_naive(a, b)?,
        spearman_tie_adjusted: spearman_tie_adjusted(a, b)?,
        exact_matches,
        sum_sq_diff: sum_sq_diff(a, b),
        max_abs_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(ranks: &[f64]) -> RankVector {
        RankVector::from_ranks(ranks.to_vec()).unwrap()
    }

    #[test]
    fn identical_vectors_correlate_perfectly() {
        let a = rv(&[1.0, 2.0, 2.0, 4.0, 5.0]);
        let report = agreement(&a, &a).unwrap();
        assert_eq!(report.spearman_naive, 1.0);
        assert_eq!(report.spearman_tie_adjusted, 1.0);
        assert_eq!(report.exact_matches, 5);
        assert_eq!(report.sum_sq_diff, 0.0);
        assert_eq!(report.max_abs_diff, 0.0);
    }

    #[test]
    fn exact_reversal_of_permutation() {
        let a = rv(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        let b = rv(&[5.0, 4.0, 3.0, 2.0, 1.0]);
        assert!((spearman_naive(&a, &b).unwrap() + 1.0).abs() < 1e-15);
        assert!((spearman_tie_adjusted(&a, &b).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn coefficients_are_symmetric() {
        let a = rv(&[1.0, 4.0, 2.0, 3.0]);
        let b = rv(&[2.0, 1.0, 4.0, 3.0]);
        assert_eq!(
            spearman_naive(&a, &b).unwrap(),
            spearman_naive(&b, &a).unwrap()
        );
        assert_eq!(
            spearman_tie_adjusted(&a, &b).unwrap(),
            spearman_tie_adjusted(&b, &a).unwrap()
        );
    }

    #[test]
    fn length_mismatch_and_short_inputs_are_rejected() {
        let a = rv(&[1.0, 2.0]);
        let b = rv(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            spearman_naive(&a, &b),
            Err(CompareError::LengthMismatch { .. })
        ));
        let single = rv(&[1.0]);
        assert!(matches!(
            spearman_naive(&single, &single),
            Err(CompareError::TooShort(1))
        ));
    }

    #[test]
    fn constant_vector_has_no_tie_adjusted_coefficient() {
        let a = rv(&[2.0, 2.0, 2.0]);
        let b = rv(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            spearman_tie_adjusted(&a, &b),
            Err(CompareError::ConstantVector)
        ));
    }

    #[test]
    fn naive_decreases_with_sum_sq_diff() {
        // For fixed m the naive coefficient is linear in sum(D^2) with a
        // negative slope.
        let base = rv(&[1.0, 2.0, 3.0, 4.0]);
        let near = rv(&[2.0, 1.0, 3.0, 4.0]);
        let far = rv(&[4.0, 3.0, 2.0, 1.0]);
        let s_near = spearman_naive(&base, &near).unwrap();
        let s_far = spearman_naive(&base, &far).unwrap();
        assert!(s_near > s_far);
    }
}
