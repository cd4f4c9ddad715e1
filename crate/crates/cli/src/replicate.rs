//! One-shot replication of the bundled bank case study.
//!
//! The study ranked 30 Vietnamese banks on six CAMELS-style indicator
//! ranks with all four methods and compared each ranking against the
//! CAMELS benchmark. This module re-runs the whole computation against
//! the published score, rank and coefficient tables, applying the
//! reverse-engineered per-method configuration: equal weights
//! throughout, benefit directions for MOORA, RAM and CURLI, cost
//! directions for FUCA, competition ties everywhere.
//!
//! The published tables are internally inconsistent in a few documented
//! places; those are reported as first-class discrepancies rather than
//! hidden, and anything else that fails its tolerance is replication
//! drift (exit code 3).

use mcdm_core::compare::{agreement, ComparisonReport};
use mcdm_core::dataset::{builtin_bank_dataset, builtin_camels_reference};
use mcdm_core::matrix::Direction;
use mcdm_core::methods::{evaluate, Method};
use mcdm_core::rank::{RankVector, TiePolicy};

use crate::config::FormatArg;
use crate::output::{fmt_fixed4, fmt_full, fmt_rank, fmt_sig12, json_string};

/// Tolerance on MOORA scores against the published 4-decimal column.
pub const MOORA_SCORE_TOLERANCE: f64 = 2e-4;
/// Tolerance on RAM scores against the published 4-decimal column.
pub const RAM_SCORE_TOLERANCE: f64 = 3e-4;
/// Tolerance on Spearman coefficients against the published values.
pub const COEFFICIENT_TOLERANCE: f64 = 1e-4;
/// Sum of squared rank differences between the published MOORA (and
/// RAM) column and CAMELS, recomputed from the columns themselves.
pub const MOORA_CAMELS_SUM_SQ: f64 = 9109.0;

/// One row of the published results table: per-method scores and ranks
/// plus the CAMELS benchmark rank.
pub struct ReferenceRow {
    pub bank: &'static str,
    pub moora_score: f64,
    pub moora_rank: f64,
    pub ram_score: f64,
    pub ram_rank: f64,
    pub fuca_score: f64,
    pub fuca_rank: f64,
    pub curli_score: f64,
    pub curli_rank: f64,
    pub camels_rank: f64,
}

macro_rules! row {
    ($bank:literal, $qs:literal, $qr:literal, $rs:literal, $rr:literal,
     $fs:literal, $fr:literal, $cs:literal, $cr:literal, $cam:literal) => {
        ReferenceRow {
            bank: $bank,
            moora_score: $qs,
            moora_rank: $qr,
            ram_score: $rs,
            ram_rank: $rr,
            fuca_score: $fs,
            fuca_rank: $fr,
            curli_score: $cs,
            curli_rank: $cr,
            camels_rank: $cam,
        }
    };
}

/// The published results table, in bank order.
pub const REFERENCE_TABLE: [ReferenceRow; 30] = [
    row!("ABB", 0.0262, 16.0, 1.4258, 16.0, 15.1667, 15.0, -3.0, 14.0, 14.0),
    row!("ACB", 0.0228, 22.0, 1.4243, 22.0, 13.1667, 9.0, -25.0, 9.0, 9.0),
    row!("AGRIBANK", 0.0303, 9.0, 1.4277, 9.0, 17.5000, 22.0, 24.0, 22.0, 22.0),
    row!("BAC A BANK", 0.0239, 20.0, 1.4248, 20.0, 13.8333, 10.0, -16.0, 11.0, 10.0),
    row!("BID", 0.0256, 19.0, 1.4256, 19.0, 14.8333, 12.0, -7.0, 12.0, 12.0),
    row!("CTG", 0.0276, 15.0, 1.4265, 15.0, 16.0000, 16.0, 9.0, 16.0, 16.0),
    row!("EIB", 0.0308, 8.0, 1.4279, 8.0, 17.8333, 23.0, 28.0, 23.0, 23.0),
    row!("HDB", 0.0175, 28.0, 1.4220, 28.0, 10.1667, 3.0, -61.0, 3.0, 3.0),
    row!("KLB", 0.0291, 12.0, 1.4271, 12.0, 16.8333, 19.0, 18.0, 18.0, 19.0),
    row!("LIEN VIET", 0.0259, 18.0, 1.4257, 18.0, 15.0000, 13.0, -5.0, 13.0, 13.0),
    row!("MBB", 0.0150, 29.0, 1.4209, 29.0, 8.6667, 2.0, -80.0, 2.0, 2.0),
    row!("MSB", 0.0297, 10.0, 1.4274, 10.0, 17.1667, 21.0, 23.0, 21.0, 21.0),
    row!("NAM A", 0.0261, 17.0, 1.4258, 17.0, 15.1667, 14.0, 1.0, 15.0, 14.0),
    row!("NCB", 0.0388, 1.0, 1.4314, 1.0, 22.5000, 30.0, 89.0, 30.0, 30.0),
    row!("OCB", 0.0181, 26.0, 1.4223, 26.0, 10.5000, 4.0, -58.0, 5.0, 4.0),
    row!("PGBANK", 0.0314, 7.0, 1.4282, 7.0, 18.1667, 24.0, 34.0, 24.0, 24.0),
    row!("PVCOMBANK", 0.0357, 3.0, 1.4300, 3.0, 20.6667, 28.0, 63.0, 28.0, 28.0),
    row!("SCB", 0.0372, 2.0, 1.4307, 2.0, 21.5000, 29.0, 74.0, 29.0, 29.0),
    row!("SEABANK", 0.0287, 14.0, 1.4269, 14.0, 16.6667, 17.0, 15.0, 17.0, 17.0),
    row!("SGB", 0.0337, 5.0, 1.4292, 5.0, 19.5000, 26.0, 49.0, 26.0, 26.0),
    row!("SHB", 0.0288, 13.0, 1.4270, 13.0, 16.6667, 17.0, 18.0, 18.0, 17.0),
    row!("STB", 0.0349, 4.0, 1.4297, 4.0, 20.1667, 27.0, 57.0, 27.0, 27.0),
    row!("TCB", 0.0130, 30.0, 1.4200, 30.0, 7.5000, 1.0, -94.0, 1.0, 1.0),
    row!("TPBANK", 0.0181, 27.0, 1.4222, 27.0, 10.5000, 4.0, -60.0, 4.0, 4.0),
    row!("VCB", 0.0204, 24.0, 1.4233, 24.0, 11.8333, 7.0, -41.0, 7.0, 7.0),
    row!("VIB", 0.0181, 25.0, 1.4223, 25.0, 10.5000, 4.0, -58.0, 5.0, 4.0),
    row!("VIET A BANK", 0.0238, 21.0, 1.4248, 21.0, 13.8333, 10.0, -19.0, 10.0, 10.0),
    row!("VIETCAPITAL", 0.0316, 6.0, 1.4282, 6.0, 18.3333, 25.0, 39.0, 25.0, 25.0),
    row!("VPB", 0.0216, 23.0, 1.4238, 23.0, 12.5000, 8.0, -33.0, 8.0, 8.0),
    row!("VIETBANK", 0.0291, 11.0, 1.4271, 11.0, 16.8333, 20.0, 19.0, 20.0, 19.0),
];

/// The published coefficient row: naive Spearman of each method's rank
/// column against CAMELS.
pub const REFERENCE_COEFFICIENTS: [(Method, f64); 4] = [
    (Method::Moora, -1.0265),
    (Method::Ram, -1.0265),
    (Method::Fuca, 0.9996),
    (Method::Curli, 0.9984),
];

impl ReferenceRow {
    pub fn score(&self, method: Method) -> f64 {
        match method {
            Method::Moora => self.moora_score,
            Method::Ram => self.ram_score,
            Method::Fuca => self.fuca_score,
            Method::Curli => self.curli_score,
        }
    }

    pub fn rank(&self, method: Method) -> f64 {
        match method {
            Method::Moora => self.moora_rank,
            Method::Ram => self.ram_rank,
            Method::Fuca => self.fuca_rank,
            Method::Curli => self.curli_rank,
        }
    }
}

/// The published rank column of one method, in bank order.
pub fn reference_ranks(method: Method) -> Vec<f64> {
    REFERENCE_TABLE.iter().map(|r| r.rank(method)).collect()
}

/// The CAMELS benchmark column, in bank order.
pub fn reference_camels() -> Vec<f64> {
    REFERENCE_TABLE.iter().map(|r| r.camels_rank).collect()
}

/// Directions pinned for the replication run of each method. The study
/// never states them; these are the configurations under which the
/// published score columns reproduce (checked by the drift gate).
pub fn replication_direction(method: Method) -> Direction {
    match method {
        Method::Fuca => Direction::Cost,
        Method::Moora | Method::Ram | Method::Curli => Direction::Benefit,
    }
}

/// Engine results for one method next to the published columns.
pub struct MethodReplication {
    pub method: Method,
    pub direction: Direction,
    pub scores: Vec<f64>,
    pub ranks: Vec<f64>,
    pub reference_scores: Vec<f64>,
    pub reference_ranks: Vec<f64>,
    /// Indices where the engine rank differs from the published rank.
    pub rank_mismatches: Vec<usize>,
}

/// Spearman coefficients of one published rank column against CAMELS.
pub struct CoefficientRow {
    pub method: Method,
    pub comparison: ComparisonReport,
    pub reference_value: f64,
}

/// A documented inconsistency inside the published tables.
pub struct Discrepancy {
    pub id: &'static str,
    /// The fixture cells the entry concerns.
    pub cells: String,
    pub detail: String,
}

pub struct ReplicationReport {
    pub alternatives: Vec<String>,
    pub camels: Vec<f64>,
    pub methods: Vec<MethodReplication>,
    pub coefficients: Vec<CoefficientRow>,
    pub discrepancies: Vec<Discrepancy>,
    /// Tolerance violations; empty means the replication is clean.
    pub drift: Vec<String>,
}

impl ReplicationReport {
    pub fn is_clean(&self) -> bool {
        self.drift.is_empty()
    }

    pub fn method(&self, method: Method) -> &MethodReplication {
        self.methods
            .iter()
            .find(|m| m.method == method)
            .expect("all four methods are replicated")
    }

    pub fn coefficient(&self, method: Method) -> &CoefficientRow {
        self.coefficients
            .iter()
            .find(|c| c.method == method)
            .expect("all four methods have coefficients")
    }
}

/// Runs the full replication and checks every published value at its
/// tolerance.
pub fn run_replication() -> ReplicationReport {
    let dataset = builtin_bank_dataset();
    let camels_reference = builtin_camels_reference();
    let alternatives: Vec<String> = dataset.matrix.alternatives().to_vec();
    let camels = reference_camels();
    let mut drift = Vec::new();

    // The shipped CAMELS fixture and the published table column must be
    // one and the same.
    for (i, bank) in alternatives.iter().enumerate() {
        if camels_reference.ranks[i] != camels[i] {
            drift.push(format!(
                "CAMELS fixture for {bank}: {} vs published {}",
                camels_reference.ranks[i], camels[i]
            ));
        }
    }

    let methods: Vec<MethodReplication> = Method::ALL
        .iter()
        .map(|&method| {
            let direction = replication_direction(method);
            let matrix = dataset
                .matrix
                .with_directions(&[direction; 6])
                .expect("six directions for six criteria");
            let result = evaluate(method, &matrix, TiePolicy::Competition)
                .expect("the bank matrix satisfies every method precondition");
            let reference_scores: Vec<f64> =
                REFERENCE_TABLE.iter().map(|r| r.score(method)).collect();
            let reference_ranks = reference_ranks(method);
            let ranks: Vec<f64> = result.ranks.as_slice().to_vec();
            let rank_mismatches: Vec<usize> = (0..ranks.len())
                .filter(|&i| ranks[i] != reference_ranks[i])
                .collect();
            MethodReplication {
                method,
                direction,
                scores: result.scores,
                ranks,
                reference_scores,
                reference_ranks,
                rank_mismatches,
            }
        })
        .collect();

    check_scores(&methods, &alternatives, &mut drift);
    check_ranks(&methods, &alternatives, &mut drift);

    // Coefficients are computed from the published rank columns, so the
    // published coefficient row is reproduced even where the engine
    // legitimately deviates from the table (the FUCA tie).
    let coefficients: Vec<CoefficientRow> = REFERENCE_COEFFICIENTS
        .iter()
        .map(|&(method, reference_value)| {
            let published = RankVector::from_ranks(reference_ranks(method)).unwrap();
            let camels_rv = RankVector::from_ranks(camels.clone()).unwrap();
            let comparison = agreement(&published, &camels_rv)
                .expect("published columns are comparable");
            CoefficientRow {
                method,
                comparison,
                reference_value,
            }
        })
        .collect();
    check_coefficients(&coefficients, &mut drift);

    let discrepancies = build_discrepancies(&methods, &alternatives);

    ReplicationReport {
        alternatives,
        camels,
        methods,
        coefficients,
        discrepancies,
        drift,
    }
}

fn check_scores(methods: &[MethodReplication], alternatives: &[String], drift: &mut Vec<String>) {
    for replication in methods {
        for (i, bank) in alternatives.iter().enumerate() {
            let engine = replication.scores[i];
            let reference = replication.reference_scores[i];
            let ok = match replication.method {
                Method::Moora => (engine - reference).abs() <= MOORA_SCORE_TOLERANCE,
                Method::Ram => (engine - reference).abs() <= RAM_SCORE_TOLERANCE,
                // The published FUCA column is exact at 4 decimals and
                // the CURLI column is integer-exact.
                Method::Fuca => fmt_fixed4(engine) == fmt_fixed4(reference),
                Method::Curli => engine == reference,
            };
            if !ok {
                drift.push(format!(
                    "{} score for {bank}: {engine} vs published {reference}",
                    replication.method
                ));
            }
        }
    }
}

fn check_ranks(methods: &[MethodReplication], alternatives: &[String], drift: &mut Vec<String>) {
    for replication in methods {
        for &i in &replication.rank_mismatches {
            let engine = replication.ranks[i];
            let reference = replication.reference_ranks[i];
            // Sole permitted deviation: the published FUCA column breaks
            // the KLB/VIETBANK tie while competition ranking keeps it.
            let permitted = replication.method == Method::Fuca
                && alternatives[i] == "VIETBANK"
                && engine == 19.0
                && reference == 20.0;
            if !permitted {
                drift.push(format!(
                    "{} rank for {}: {} vs published {}",
                    replication.method,
                    alternatives[i],
                    fmt_rank(engine),
                    fmt_rank(reference)
                ));
            }
        }
    }

    // The study's headline observation: MOORA and RAM must rank the
    // banks identically.
    let moora = methods.iter().find(|m| m.method == Method::Moora).unwrap();
    let ram = methods.iter().find(|m| m.method == Method::Ram).unwrap();
    if moora.ranks != ram.ranks {
        drift.push("MOORA and RAM rank vectors differ".to_string());
    }
}

fn check_coefficients(coefficients: &[CoefficientRow], drift: &mut Vec<String>) {
    for row in coefficients {
        let naive = row.comparison.spearman_naive;
        if (naive - row.reference_value).abs() > COEFFICIENT_TOLERANCE {
            drift.push(format!(
                "{} coefficient vs CAMELS: {naive} vs published {}",
                row.method, row.reference_value
            ));
        }
        let adjusted = row.comparison.spearman_tie_adjusted;
        if !(-1.0..=1.0).contains(&adjusted) {
            drift.push(format!(
                "{} tie-adjusted coefficient {adjusted} is outside [-1, 1]",
                row.method
            ));
        }
        match row.method {
            Method::Moora | Method::Ram => {
                if row.comparison.sum_sq_diff != MOORA_CAMELS_SUM_SQ {
                    drift.push(format!(
                        "{} sum of squared differences: {} vs derived {}",
                        row.method, row.comparison.sum_sq_diff, MOORA_CAMELS_SUM_SQ
                    ));
                }
                // The naive coefficient must demonstrably escape [-1, 1]:
                // CAMELS contains ties the naive formula does not correct.
                if naive >= -1.0 {
                    drift.push(format!(
                        "{} naive coefficient {naive} unexpectedly inside [-1, 1]",
                        row.method
                    ));
                }
            }
            Method::Fuca | Method::Curli => {}
        }
    }
}

fn build_discrepancies(
    methods: &[MethodReplication],
    alternatives: &[String],
) -> Vec<Discrepancy> {
    let fuca = methods.iter().find(|m| m.method == Method::Fuca).unwrap();
    let klb = alternatives.iter().position(|a| a == "KLB").unwrap();
    let vietbank = alternatives.iter().position(|a| a == "VIETBANK").unwrap();

    vec![
        Discrepancy {
            id: "fuca-tie-handling",
            cells: "FUCA ranks, rows KLB and VIETBANK".to_string(),
            detail: format!(
                "KLB and VIETBANK share the FUCA score 16.8333 (both weighted rank-sums are \
                 101/6), yet the published column ranks them 19 and 20 while the tied trio \
                 OCB/TPBANK/VIB all take rank 4. Under the competition policy the engine ties \
                 both at rank {}; VIETBANK therefore reads {} here against 20 in the published \
                 column.",
                fmt_rank(fuca.ranks[klb]),
                fmt_rank(fuca.ranks[vietbank]),
            ),
        },
        Discrepancy {
            id: "headline-coefficient",
            cells: "MOORA and RAM coefficients vs CAMELS".to_string(),
            detail: "The study also circulates -1.0296 as the MOORA/RAM coefficient against \
                     CAMELS. Recomputing from the published rank columns gives -1.0265 (sum of \
                     squared differences 9109); no column assignment reproduces -1.0296, so it \
                     is treated as a typo."
                .to_string(),
        },
        Discrepancy {
            id: "fuca-agreement-count",
            cells: "FUCA ranks vs CAMELS, rows ABB and VIETBANK".to_string(),
            detail: "The study's narrative counts 29 of 30 FUCA ranks agreeing with CAMELS and \
                     names ABB as the sole exception, but the published columns agree on 28 of \
                     30: ABB (15 vs 14) and VIETBANK (20 vs 19) both differ."
                .to_string(),
        },
    ]
}

/// Renders the replication report.
pub fn render_replication(report: &ReplicationReport, format: FormatArg) -> String {
    match format {
        FormatArg::Table => render_table(report),
        FormatArg::Csv => render_csv(report),
        FormatArg::Json => render_json(report),
    }
}

fn render_table(report: &ReplicationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "bank case study replication ({} alternatives, 6 criteria, equal weights, competition ties)\n",
        report.alternatives.len()
    ));

    let name_width = report
        .alternatives
        .iter()
        .map(|a| a.len())
        .max()
        .unwrap_or(0)
        .max("alternative".len());
    for replication in &report.methods {
        out.push_str(&format!(
            "\nmethod: {} (directions: {})\n",
            replication.method, replication.direction
        ));
        out.push_str(&format!(
            "{:<name_width$}  {:>10}  {:>5}  {:>9}\n",
            "alternative", "score", "rank", "published"
        ));
        for (i, alt) in report.alternatives.iter().enumerate() {
            let marker = if replication.ranks[i] != replication.reference_ranks[i] {
                " *"
            } else {
                ""
            };
            out.push_str(&format!(
                "{:<name_width$}  {:>10}  {:>5}  {:>9}{marker}\n",
                alt,
                fmt_fixed4(replication.scores[i]),
                fmt_rank(replication.ranks[i]),
                fmt_rank(replication.reference_ranks[i]),
            ));
        }
    }

    out.push_str("\ncoefficients vs CAMELS (from the published rank columns)\n");
    out.push_str(&format!(
        "{:<8}  {:>8}  {:>12}  {:>9}\n",
        "method", "naive", "tie-adjusted", "published"
    ));
    for row in &report.coefficients {
        out.push_str(&format!(
            "{:<8}  {:>8}  {:>12}  {:>9}\n",
            row.method.as_str(),
            fmt_fixed4(row.comparison.spearman_naive),
            fmt_fixed4(row.comparison.spearman_tie_adjusted),
            fmt_fixed4(row.reference_value),
        ));
    }

    out.push_str("\ndiscrepancies in the published tables:\n");
    for d in &report.discrepancies {
        out.push_str(&format!("- {} ({}):\n  {}\n", d.id, d.cells, d.detail));
    }

    if report.is_clean() {
        out.push_str("\nresult: PASS (every published value reproduced within tolerance)\n");
    } else {
        out.push_str("\nresult: DRIFT\n");
        for line in &report.drift {
            out.push_str(&format!("- {line}\n"));
        }
    }
    out
}

fn render_csv(report: &ReplicationReport) -> String {
    let mut out = String::from("method,alternative,score,rank,published_rank,matches\n");
    for replication in &report.methods {
        for (i, alt) in report.alternatives.iter().enumerate() {
            out.push_str(&format!(
                "{},{alt},{},{},{},{}\n",
                replication.method,
                fmt_full(replication.scores[i]),
                fmt_rank(replication.ranks[i]),
                fmt_rank(replication.reference_ranks[i]),
                replication.ranks[i] == replication.reference_ranks[i],
            ));
        }
    }
    out.push_str("\nmethod,spearman_naive,spearman_tie_adjusted,published\n");
    for row in &report.coefficients {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.method,
            fmt_full(row.comparison.spearman_naive),
            fmt_full(row.comparison.spearman_tie_adjusted),
            fmt_full(row.reference_value),
        ));
    }
    out.push_str("\ndiscrepancy,cells,detail\n");
    for d in &report.discrepancies {
        out.push_str(&format!(
            "{},{},{}\n",
            d.id,
            csv_quote(&d.cells),
            csv_quote(&d.detail)
        ));
    }
    out.push_str(&format!(
        "\nstatus,{}\n",
        if report.is_clean() { "pass" } else { "drift" }
    ));
    for line in &report.drift {
        out.push_str(&format!("drift,{}\n", csv_quote(line)));
    }
    out
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn render_json(report: &ReplicationReport) -> String {
    let alternatives: Vec<String> = report
        .alternatives
        .iter()
        .map(|a| json_string(a))
        .collect();
    let methods: Vec<String> = report
        .methods
        .iter()
        .map(|m| {
            let scores: Vec<String> = m.scores.iter().map(|&s| fmt_sig12(s)).collect();
            let ranks: Vec<String> = m.ranks.iter().map(|&r| fmt_rank(r)).collect();
            let published: Vec<String> =
                m.reference_ranks.iter().map(|&r| fmt_rank(r)).collect();
            let mismatches: Vec<String> = m
                .rank_mismatches
                .iter()
                .map(|&i| json_string(&report.alternatives[i]))
                .collect();
            format!(
                "{{\"method\":{},\"directions\":{},\"scores\":[{}],\"ranks\":[{}],\"published_ranks\":[{}],\"rank_mismatches\":[{}]}}",
                json_string(m.method.as_str()),
                json_string(&m.direction.to_string()),
                scores.join(","),
                ranks.join(","),
                published.join(","),
                mismatches.join(","),
            )
        })
        .collect();
    let coefficients: Vec<String> = report
        .coefficients
        .iter()
        .map(|c| {
            format!(
                "{{\"method\":{},\"comparison\":{},\"published\":{}}}",
                json_string(c.method.as_str()),
                crate::output::comparison_json(&c.comparison),
                fmt_sig12(c.reference_value),
            )
        })
        .collect();
    let discrepancies: Vec<String> = report
        .discrepancies
        .iter()
        .map(|d| {
            format!(
                "{{\"id\":{},\"cells\":{},\"detail\":{}}}",
                json_string(d.id),
                json_string(&d.cells),
                json_string(&d.detail),
            )
        })
        .collect();
    let drift: Vec<String> = report.drift.iter().map(|l| json_string(l)).collect();
    format!(
        "{{\"alternatives\":[{}],\"camels\":[{}],\"methods\":[{}],\"coefficients\":[{}],\"discrepancies\":[{}],\"drift\":[{}],\"status\":{}}}\n",
        alternatives.join(","),
        report
            .camels
            .iter()
            .map(|&r| fmt_rank(r))
            .collect::<Vec<_>>()
            .join(","),
        methods.join(","),
        coefficients.join(","),
        discrepancies.join(","),
        drift.join(","),
        json_string(if report.is_clean() { "pass" } else { "drift" }),
    )
}
