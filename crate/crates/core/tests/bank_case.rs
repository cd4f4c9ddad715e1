//! Anchor tests for the bundled 30-bank case study.
//!
//! Expected values were derived independently before the engine was
//! built: normalization denominators by direct summation, rank-sum
//! scores by hand, pairwise totals by counting, and coefficients from
//! the published reference columns.

use mcdm_core::compare::{agreement, spearman_naive, spearman_tie_adjusted};
use mcdm_core::dataset::{builtin_bank_dataset, builtin_camels_reference};
use mcdm_core::matrix::{DecisionMatrix, Direction};
use mcdm_core::methods::{curli, fuca, moora, ram};
use mcdm_core::normalize::{sum_normalize, vector_normalize};
use mcdm_core::rank::{column_ranks, rank_scores, RankOrder, RankVector, TiePolicy};

fn bank_matrix(direction: Direction) -> DecisionMatrix {
    let doc = builtin_bank_dataset();
    doc.matrix.with_directions(&[direction; 6]).unwrap()
}

fn index_of(matrix: &DecisionMatrix, name: &str) -> usize {
    matrix
        .alternatives()
        .iter()
        .position(|a| a == name)
        .unwrap_or_else(|| panic!("unknown alternative {name}"))
}

#[test]
fn bank_matrix_validates_cleanly() {
    let report = builtin_bank_dataset().matrix.validate();
    assert!(report.is_ok());
    assert!(report.violations.is_empty());
}

#[test]
fn vector_normalization_anchors() {
    let m = bank_matrix(Direction::Cost);
    // Independent oracle: C1 is a permutation of 1..30, so the squared
    // column sum is sum(k^2) computed by direct summation.
    let sum_sq: f64 = (1..=30).map(|k| (k * k) as f64).sum();
    assert_eq!(sum_sq, 9455.0);
    let denominator = sum_sq.sqrt();
    assert!((denominator - 97.23682).abs() < 1e-5);

    let normalized = vector_normalize(&m).unwrap();
    let tcb = index_of(&m, "TCB");
    assert!((normalized.value(tcb, 0) - 2.0 / denominator).abs() < 1e-15);
    assert!((normalized.value(tcb, 0) - 0.020568).abs() < 1e-6);
}

#[test]
fn sum_normalization_anchors() {
    let m = bank_matrix(Direction::Cost);
    let c1_sum: f64 = m.column(0).iter().sum();
    let c2_sum: f64 = m.column(1).iter().sum();
    assert_eq!(c1_sum, 465.0);
    // Ties pull the C2 sum below the tie-free 465.
    assert_eq!(c2_sum, 455.0);

    let normalized = sum_normalize(&m).unwrap();
    let tcb = index_of(&m, "TCB");
    assert!((normalized.value(tcb, 0) - 2.0 / 465.0).abs() < 1e-15);
    assert!((normalized.value(tcb, 0) - 0.0043011).abs() < 1e-7);
}

#[test]
fn column_ranking_the_bank_matrix_is_idempotent() {
    // The columns are already competition-style ranks with smaller
    // better, so re-ranking them cost-wise must reproduce them exactly.
    // Checked against an independent counting oracle as well.
    let m = bank_matrix(Direction::Cost);
    let table = column_ranks(&m, TiePolicy::Competition).unwrap();
    for j in 0..6 {
        let column = m.column(j);
        let oracle: Vec<f64> = column
            .iter()
            .map(|&v| 1.0 + column.iter().filter(|&&o| o < v).count() as f64)
            .collect();
        assert_eq!(oracle, column, "column {} is not competition-ranked", j + 1);
        assert_eq!(table.column(j).as_slice(), column.as_slice(), "column {}", j + 1);
    }
}

#[test]
fn moora_bank_anchors() {
    let m = bank_matrix(Direction::Benefit);
    let result = moora(&m, TiePolicy::Competition).unwrap();
    let tcb = index_of(&m, "TCB");
    let ncb = index_of(&m, "NCB");
    let mbb = index_of(&m, "MBB");
    assert!((result.scores[tcb] - 0.0130).abs() < 2e-4);
    assert!((result.scores[ncb] - 0.0388).abs() < 2e-4);
    assert!((result.scores[mbb] - 0.0150).abs() < 2e-4);
    assert_eq!(result.ranks[tcb], 30.0);
    assert_eq!(result.ranks[ncb], 1.0);
    assert_eq!(result.ranks[mbb], 29.0);
}

#[test]
fn ram_bank_anchors() {
    let m = bank_matrix(Direction::Benefit);
    let result = ram(&m, TiePolicy::Competition).unwrap();
    let tcb = index_of(&m, "TCB");
    let ncb = index_of(&m, "NCB");
    assert!((result.scores[tcb] - 1.4200).abs() < 3e-4);
    assert!((result.scores[ncb] - 1.4314).abs() < 3e-4);
    assert_eq!(result.ranks[tcb], 30.0);
    assert_eq!(result.ranks[ncb], 1.0);
}

#[test]
fn moora_and_ram_rank_the_banks_identically() {
    let m = bank_matrix(Direction::Benefit);
    let moora_result = moora(&m, TiePolicy::Competition).unwrap();
    let ram_result = ram(&m, TiePolicy::Competition).unwrap();
    assert_eq!(moora_result.ranks, ram_result.ranks);
}

#[test]
fn fuca_bank_anchors() {
    let m = bank_matrix(Direction::Cost);
    let result = fuca(&m, TiePolicy::Competition).unwrap();
    let abb = index_of(&m, "ABB");
    let tcb = index_of(&m, "TCB");
    let ncb = index_of(&m, "NCB");
    // Row sums 91, 45 and 135 over six equally weighted columns.
    assert!((result.scores[abb] - 91.0 / 6.0).abs() < 1e-12);
    assert!((result.scores[tcb] - 7.5).abs() < 1e-12);
    assert!((result.scores[ncb] - 22.5).abs() < 1e-12);
    assert_eq!(result.ranks[tcb], 1.0);
    assert_eq!(result.ranks[ncb], 30.0);
}

#[test]
fn fuca_detects_the_exact_rank_sum_tie() {
    // KLB and VIETBANK both have rank-sum 101; the weighted scores must
    // land on the same float so competition ranking ties them.
    let m = bank_matrix(Direction::Cost);
    let result = fuca(&m, TiePolicy::Competition).unwrap();
    let klb = index_of(&m, "KLB");
    let vietbank = index_of(&m, "VIETBANK");
    assert_eq!(result.scores[klb], result.scores[vietbank]);
    assert_eq!(result.ranks[klb], 19.0);
    assert_eq!(result.ranks[vietbank], 19.0);
}

#[test]
fn curli_bank_anchors() {
    let m = bank_matrix(Direction::Benefit);
    let result = curli(&m, TiePolicy::Competition).unwrap();
    let tcb = index_of(&m, "TCB");
    let ncb = index_of(&m, "NCB");
    let mbb = index_of(&m, "MBB");
    assert_eq!(result.scores[tcb], -94.0);
    assert_eq!(result.scores[ncb], 89.0);
    assert_eq!(result.scores[mbb], -80.0);
    assert_eq!(result.ranks[tcb], 1.0);
    assert_eq!(result.ranks[ncb], 30.0);
    assert_eq!(result.ranks[mbb], 2.0);
    let total: f64 = result.scores.iter().sum();
    assert_eq!(total, 0.0);
}

#[test]
fn ranking_the_published_curli_scores() {
    // The published pairwise-total column, in bank order. Ranking it
    // ascending under competition must tie KLB and SHB at 18 and push
    // VIETBANK to 20.
    let scores = [
        -3.0, -25.0, 24.0, -16.0, -7.0, 9.0, 28.0, -61.0, 18.0, -5.0, -80.0, 23.0, 1.0, 89.0,
        -58.0, 34.0, 63.0, 74.0, 15.0, 49.0, 18.0, 57.0, -94.0, -60.0, -41.0, -58.0, -19.0, 39.0,
        -33.0, 19.0,
    ];
    let expected = [
        14.0, 9.0, 22.0, 11.0, 12.0, 16.0, 23.0, 3.0, 18.0, 13.0, 2.0, 21.0, 15.0, 30.0, 5.0,
        24.0, 28.0, 29.0, 17.0, 26.0, 18.0, 27.0, 1.0, 4.0, 7.0, 5.0, 10.0, 25.0, 8.0, 20.0,
    ];
    let ranks = rank_scores(&scores, RankOrder::Ascending, TiePolicy::Competition).unwrap();
    assert_eq!(ranks.as_slice(), &expected);
}

#[test]
fn engine_moora_against_camels_reproduces_the_inversion() {
    let m = bank_matrix(Direction::Benefit);
    let result = moora(&m, TiePolicy::Competition).unwrap();
    let camels = builtin_camels_reference();

    let report = agreement(&result.ranks, &camels.ranks).unwrap();
    // Sum of squared rank differences derived from the two columns.
    assert_eq!(report.sum_sq_diff, 9109.0);
    assert!((report.spearman_naive - (1.0 - 6.0 * 9109.0 / (30.0 * 899.0))).abs() < 1e-12);
    assert!((report.spearman_naive - (-1.0265)).abs() < 1e-4);
    // The naive coefficient escapes [-1, 1] because CAMELS contains
    // ties; the tie-adjusted coefficient stays inside.
    assert!(report.spearman_naive < -1.0);
    assert!((-1.0..=1.0).contains(&report.spearman_tie_adjusted));
    // Pearson correlation of the two columns, computed independently.
    assert!((report.spearman_tie_adjusted - (-0.9984770682)).abs() < 1e-9);
    assert_eq!(report.exact_matches, 0);
    assert_eq!(report.max_abs_diff, 29.0);
}

#[test]
fn camels_self_comparison_is_perfect() {
    let camels = builtin_camels_reference();
    assert_eq!(spearman_naive(&camels.ranks, &camels.ranks).unwrap(), 1.0);
    assert_eq!(
        spearman_tie_adjusted(&camels.ranks, &camels.ranks).unwrap(),
        1.0
    );
}

#[test]
fn reversal_of_a_permutation_is_minus_one() {
    let a = RankVector::from_ranks((1..=5).map(|k| k as f64).collect()).unwrap();
    let b = RankVector::from_ranks((1..=5).rev().map(|k| k as f64).collect()).unwrap();
    assert!((spearman_naive(&a, &b).unwrap() + 1.0).abs() < 1e-15);
}
