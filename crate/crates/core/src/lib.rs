//! Multi-criteria decision analysis engine.
//!
//! Ranks a set of alternatives evaluated on multiple weighted, directed
//! criteria using four methods — MOORA and RAM (normalization-based) and
//! FUCA and CURLI (order-based) — and compares rank vectors with naive
//! and tie-adjusted Spearman coefficients.
//!
//! ```
//! use mcdm_core::dataset::builtin_bank_dataset;
//! use mcdm_core::methods::{fuca, Method};
//! use mcdm_core::rank::TiePolicy;
//!
//! let banks = builtin_bank_dataset();
//! let result = fuca(&banks.matrix, TiePolicy::Competition).unwrap();
//! assert_eq!(result.method, Method::Fuca);
//! // TCB has the best (smallest) weighted rank-sum.
//! let tcb = banks.matrix.alternatives().iter().position(|a| a == "TCB").unwrap();
//! assert_eq!(result.ranks[tcb], 1.0);
//! ```
//!
//! All types are immutable after construction and every operation is a
//! pure function of its inputs, so the whole engine is safe to use from
//! multiple threads without coordination.

pub mod compare;
pub mod dataset;
pub mod matrix;
pub mod methods;
pub mod normalize;
pub mod rank;

pub use compare::{agreement, spearman_naive, spearman_tie_adjusted, ComparisonReport};
pub use dataset::{
    builtin_bank_dataset, builtin_camels_reference, load_matrix_csv, load_reference_csv,
    matrix_to_csv, MatrixDocument, ReferenceRanking,
};
pub use matrix::{Criterion, DecisionMatrix, Direction, Severity, ValidationReport, Violation};
pub use methods::{evaluate, Method, MethodResult};
pub use normalize::{apply_weights, sum_normalize, vector_normalize, NormScheme};
pub use rank::{column_ranks, rank_scores, RankOrder, RankVector, TiePolicy};
