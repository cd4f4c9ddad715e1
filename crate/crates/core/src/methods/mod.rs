//! The four ranking methods.
//!
//! Every method maps a [`DecisionMatrix`] to a [`MethodResult`]: a score
//! per alternative plus the rank vector obtained by ranking those scores
//! in the method's canonical order under the caller's tie policy.
//!
//! MOORA and RAM work on weighted normalized values (vector and sum
//! normalization respectively) and rank descending. FUCA and CURLI are
//! order-based: FUCA sums weighted per-criterion ranks, CURLI sums
//! pairwise comparison scores, and both rank ascending.

mod curli;
mod fuca;
mod moora;
mod ram;

pub use curli::{curli, curli_score_table, CurliScoreTable};
pub use fuca::fuca;
pub use moora::{moora, moora_intermediates, MooraIntermediates};
pub use ram::{ram, ram_intermediates, root_score, RamIntermediates};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::DecisionMatrix;
use crate::normalize::NormalizeError;
use crate::rank::{RankError, RankOrder, RankVector, TiePolicy};

/// Identifies one of the four ranking methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Moora,
    Ram,
    Fuca,
    Curli,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Moora, Method::Ram, Method::Fuca, Method::Curli];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Moora => "moora",
            Method::Ram => "ram",
            Method::Fuca => "fuca",
            Method::Curli => "curli",
        }
    }

    /// The score order that puts the best alternative at rank 1.
    pub fn canonical_order(self) -> RankOrder {
        match self {
            Method::Moora | Method::Ram => RankOrder::Descending,
            Method::Fuca | Method::Curli => RankOrder::Ascending,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "moora" => Ok(Method::Moora),
            "ram" => Ok(Method::Ram),
            "fuca" => Ok(Method::Fuca),
            "curli" => Ok(Method::Curli),
            _ => Err(UnknownMethod(s.to_string())),
        }
    }
}

#[derive(Debug, Error)]
#[error("unknown method {0:?}; expected one of moora, ram, fuca, curli")]
pub struct UnknownMethod(pub String);

#[derive(Debug, Error)]
pub enum MethodError {
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
    #[error(transparent)]
    Rank(#[from] RankError),
}

/// Scores and ranks produced by one method on one matrix.
#[derive(Debug, Clone)]
pub struct MethodResult {
    pub method: Method,
    pub scores: Vec<f64>,
    pub ranks: RankVector,
}

/// Runs `method` on `matrix` under `policy`.
pub fn evaluate(
    method: Method,
    matrix: &DecisionMatrix,
    policy: TiePolicy,
) -> Result<MethodResult, MethodError> {
    match method {
        Method::Moora => moora(matrix, policy),
        Method::Ram => ram(matrix, policy),
        Method::Fuca => fuca(matrix, policy),
        Method::Curli => curli(matrix, policy),
    }
}

/// Kahan-compensated sum. Plain left-to-right accumulation lets the
/// column order decide whether mathematically equal weighted rank-sums
/// land on the same float; the compensated form does not.
pub(crate) fn kahan_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for term in terms {
        let y = term - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_parsing() {
        assert_eq!("MOORA".parse::<Method>().unwrap(), Method::Moora);
        assert_eq!(" curli ".parse::<Method>().unwrap(), Method::Curli);
        assert!("topsis".parse::<Method>().is_err());
    }

    #[test]
    fn canonical_orders() {
        assert_eq!(Method::Moora.canonical_order(), RankOrder::Descending);
        assert_eq!(Method::Ram.canonical_order(), RankOrder::Descending);
        assert_eq!(Method::Fuca.canonical_order(), RankOrder::Ascending);
        assert_eq!(Method::Curli.canonical_order(), RankOrder::Ascending);
    }

    #[test]
    fn kahan_sum_matches_plain_sum_on_exact_input() {
        assert_eq!(kahan_sum([1.0, 2.0, 3.0]), 6.0);
        assert_eq!(kahan_sum(std::iter::empty()), 0.0);
    }
}
