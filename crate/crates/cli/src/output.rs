//! Rendering of results in table, CSV and JSON form.
//!
//! The three formats carry the same numeric content at different
//! precisions: tables round scores and coefficients to 4 decimals, CSV
//! uses the shortest decimal form that round-trips the exact f64, and
//! JSON fixes continuous values at 12 significant digits so that equal
//! inputs always produce byte-identical output. Exact discrete values
//! (ranks, counts, squared-difference sums) keep their shortest exact
//! form in every format.

use mcdm_core::compare::ComparisonReport;
use mcdm_core::methods::MethodResult;

use crate::config::FormatArg;

/// 4-decimal display used in table mode.
pub fn fmt_fixed4(x: f64) -> String {
    format!("{x:.4}")
}

/// Fixed 12-significant-digit form used for continuous values in JSON.
pub fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Ranks print as integers when integral (always under competition and
/// ordinal ties) and keep their exact fraction otherwise.
pub fn fmt_rank(r: f64) -> String {
    if r.fract() == 0.0 {
        format!("{}", r as i64)
    } else {
        r.to_string()
    }
}

/// Full-precision decimal form for CSV output.
pub fn fmt_full(x: f64) -> String {
    x.to_string()
}

/// Minimal JSON string escaping; names in this domain are plain text.
pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_string_array(items: &[String]) -> String {
    let body: Vec<String> = items.iter().map(|s| json_string(s)).collect();
    format!("[{}]", body.join(","))
}

fn json_score_array(scores: &[f64]) -> String {
    let body: Vec<String> = scores.iter().map(|&s| fmt_sig12(s)).collect();
    format!("[{}]", body.join(","))
}

fn json_rank_array(ranks: impl Iterator<Item = f64>) -> String {
    let body: Vec<String> = ranks.map(fmt_rank).collect();
    format!("[{}]", body.join(","))
}

fn method_json(result: &MethodResult, alternatives: &[String]) -> String {
    format!(
        "{{\"method\":{},\"alternatives\":{},\"scores\":{},\"ranks\":{}}}",
        json_string(result.method.as_str()),
        json_string_array(alternatives),
        json_score_array(&result.scores),
        json_rank_array(result.ranks.iter().copied()),
    )
}

/// Renders one or more method results.
pub fn render_rank(
    results: &[MethodResult],
    alternatives: &[String],
    format: FormatArg,
) -> String {
    match format {
        FormatArg::Table => {
            let mut out = String::new();
            let name_width = alternatives
                .iter()
                .map(|a| a.len())
                .max()
                .unwrap_or(0)
                .max("alternative".len());
            for (k, result) in results.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("method: {}\n", result.method));
                out.push_str(&format!(
                    "{:<name_width$}  {:>12}  {:>5}\n",
                    "alternative", "score", "rank"
                ));
                for (i, alt) in alternatives.iter().enumerate() {
                    out.push_str(&format!(
                        "{:<name_width$}  {:>12}  {:>5}\n",
                        alt,
                        fmt_fixed4(result.scores[i]),
                        fmt_rank(result.ranks[i]),
                    ));
                }
            }
            out
        }
        FormatArg::Csv => {
            let mut out = String::from("alternative,method,score,rank\n");
            for result in results {
                for (i, alt) in alternatives.iter().enumerate() {
                    out.push_str(&format!(
                        "{alt},{},{},{}\n",
                        result.method,
                        fmt_full(result.scores[i]),
                        fmt_rank(result.ranks[i]),
                    ));
                }
            }
            out
        }
        FormatArg::Json => {
            let mut out = if results.len() == 1 {
                method_json(&results[0], alternatives)
            } else {
                let body: Vec<String> = results
                    .iter()
                    .map(|r| method_json(r, alternatives))
                    .collect();
                format!("[{}]", body.join(","))
            };
            out.push('\n');
            out
        }
    }
}

/// Renders a comparison between two rank vectors.
pub fn render_comparison(
    label_a: &str,
    label_b: &str,
    names: &[String],
    report: &ComparisonReport,
    format: FormatArg,
) -> String {
    match format {
        FormatArg::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "comparison: {label_a} vs {label_b} ({} alternatives)\n",
                names.len()
            ));
            out.push_str(&format!(
                "spearman (naive):        {}\n",
                fmt_fixed4(report.spearman_naive)
            ));
            out.push_str(&format!(
                "spearman (tie-adjusted): {}\n",
                fmt_fixed4(report.spearman_tie_adjusted)
            ));
            out.push_str(&format!(
                "exact matches:           {} of {}\n",
                report.exact_matches,
                names.len()
            ));
            out.push_str(&format!(
                "sum of squared D:        {}\n",
                fmt_rank(report.sum_sq_diff)
            ));
            out.push_str(&format!(
                "max |D|:                 {}\n",
                fmt_rank(report.max_abs_diff)
            ));
            out
        }
        FormatArg::Csv => {
            let mut out = String::from("metric,value\n");
            out.push_str(&format!("spearman_naive,{}\n", fmt_full(report.spearman_naive)));
            out.push_str(&format!(
                "spearman_tie_adjusted,{}\n",
                fmt_full(report.spearman_tie_adjusted)
            ));
            out.push_str(&format!("exact_matches,{}\n", report.exact_matches));
            out.push_str(&format!("sum_sq_diff,{}\n", fmt_rank(report.sum_sq_diff)));
            out.push_str(&format!("max_abs_diff,{}\n", fmt_rank(report.max_abs_diff)));
            out
        }
        FormatArg::Json => format!(
            "{{\"method\":{},\"alternatives\":{},\"comparison\":{}}}\n",
            json_string(&format!("compare:{label_a}-vs-{label_b}")),
            json_string_array(names),
            comparison_json(report),
        ),
    }
}

pub fn comparison_json(report: &ComparisonReport) -> String {
    format!(
        "{{\"spearman_naive\":{},\"spearman_tie_adjusted\":{},\"exact_matches\":{},\"sum_sq_diff\":{},\"max_abs_diff\":{}}}",
        fmt_sig12(report.spearman_naive),
        fmt_sig12(report.spearman_tie_adjusted),
        report.exact_matches,
        fmt_rank(report.sum_sq_diff),
        fmt_rank(report.max_abs_diff),
    )
}
