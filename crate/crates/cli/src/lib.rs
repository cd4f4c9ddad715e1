//! Command-line front end for the mcdm-core engine.
//!
//! Exit codes: 0 success, 1 data error (unreadable or invalid input),
//! 2 configuration error (bad flags, count mismatches), 3 replication
//! drift.

pub mod config;
pub mod output;
pub mod replicate;

use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;

use mcdm_core::compare::agreement;
use mcdm_core::dataset::{
    builtin_bank_dataset, builtin_camels_reference, load_matrix_csv, load_reference_csv,
    MatrixDocument, ReferenceRanking, BUILTIN_BANKS, BUILTIN_CAMELS,
};
use mcdm_core::methods::evaluate;
use mcdm_core::rank::{RankVector, TiePolicy};

use config::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DRIFT: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable, unparsable or invalid input data (exit 1).
    Data(String),
    /// Inconsistent or invalid flags (exit 2).
    Config(String),
    /// The replication violated a tolerance (exit 3).
    Drift(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Data(_) => EXIT_DATA,
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Drift(_) => EXIT_DRIFT,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Data(m) | CliError::Config(m) | CliError::Drift(m) => m,
        }
    }
}

/// Parses the process arguments and runs the selected command,
/// returning the process exit code. Output goes to `--output` or
/// standard output; errors go to standard error.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(error) => {
            eprintln!("error: {}", error.message());
            error.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Rank {
            input,
            method,
            weights,
            directions,
            ties,
            format,
            output,
        } => {
            let methods = config::parse_methods(&method)?;
            let document = load_matrix_source(&input)?;
            let mut matrix = document.matrix;
            if let Some(list) = directions {
                let parsed = config::parse_directions(&list, matrix.criterion_count())?;
                matrix = matrix
                    .with_directions(&parsed)
                    .map_err(|e| CliError::Config(e.to_string()))?;
            }
            if let Some(list) = weights {
                let parsed = config::parse_weights(&list, matrix.criterion_count())?;
                matrix = matrix
                    .with_weights(&parsed)
                    .map_err(|e| CliError::Config(e.to_string()))?;
            }
            let policy: TiePolicy = ties.into();
            let results = methods
                .into_iter()
                .map(|m| evaluate(m, &matrix, policy))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Data(e.to_string()))?;
            let rendered = output::render_rank(&results, matrix.alternatives(), format);
            emit(&rendered, output.as_deref())
        }
        Command::Compare {
            input,
            reference,
            format,
            output,
        } => {
            let a = load_reference_source(&input)?;
            let b = load_reference_source(&reference)?;
            let (names, ranks_a, ranks_b) = join_by_name(&a, &b)?;
            let report = agreement(&ranks_a, &ranks_b).map_err(|e| CliError::Data(e.to_string()))?;
            let rendered =
                output::render_comparison(&a.label, &b.label, &names, &report, format);
            emit(&rendered, output.as_deref())
        }
        Command::Replicate { format, output } => {
            let report = replicate::run_replication();
            let rendered = replicate::render_replication(&report, format);
            emit(&rendered, output.as_deref())?;
            if report.is_clean() {
                Ok(())
            } else {
                Err(CliError::Drift(format!(
                    "replication drift in {} value(s):\n{}",
                    report.drift.len(),
                    report.drift.join("\n")
                )))
            }
        }
    }
}

fn load_matrix_source(source: &str) -> Result<MatrixDocument, CliError> {
    if source == BUILTIN_BANKS {
        return Ok(builtin_bank_dataset());
    }
    if let Some(name) = source.strip_prefix("builtin:") {
        return Err(CliError::Data(format!(
            "unknown builtin matrix {name:?}; available: builtin:banks"
        )));
    }
    let file = fs::File::open(source)
        .map_err(|e| CliError::Data(format!("cannot open {source}: {e}")))?;
    load_matrix_csv(file, source).map_err(|e| CliError::Data(format!("{source}: {e}")))
}

fn load_reference_source(source: &str) -> Result<ReferenceRanking, CliError> {
    if source == BUILTIN_CAMELS {
        return Ok(builtin_camels_reference());
    }
    if let Some(name) = source.strip_prefix("builtin:") {
        return Err(CliError::Data(format!(
            "unknown builtin ranking {name:?}; available: builtin:camels"
        )));
    }
    let file = fs::File::open(source)
        .map_err(|e| CliError::Data(format!("cannot open {source}: {e}")))?;
    let label = Path::new(source)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    load_reference_csv(file, &label).map_err(|e| CliError::Data(format!("{source}: {e}")))
}

/// Joins two reference rankings by alternative name (order-insensitive,
/// using the first argument's order). Every name must appear on both
/// sides.
fn join_by_name(
    a: &ReferenceRanking,
    b: &ReferenceRanking,
) -> Result<(Vec<String>, RankVector, RankVector), CliError> {
    let missing_in_b: Vec<&str> = a
        .names
        .iter()
        .filter(|name| !b.names.contains(name))
        .map(|s| s.as_str())
        .collect();
    let missing_in_a: Vec<&str> = b
        .names
        .iter()
        .filter(|name| !a.names.contains(name))
        .map(|s| s.as_str())
        .collect();
    if !missing_in_b.is_empty() || !missing_in_a.is_empty() {
        let mut parts = Vec::new();
        if !missing_in_b.is_empty() {
            parts.push(format!(
                "missing from {}: {}",
                b.label,
                missing_in_b.join(", ")
            ));
        }
        if !missing_in_a.is_empty() {
            parts.push(format!(
                "missing from {}: {}",
                a.label,
                missing_in_a.join(", ")
            ));
        }
        return Err(CliError::Data(format!(
            "alternative sets do not match; {}",
            parts.join("; ")
        )));
    }

    let mut b_ranks = Vec::with_capacity(a.names.len());
    for name in &a.names {
        let i = b.names.iter().position(|n| n == name).unwrap();
        b_ranks.push(b.ranks[i]);
    }
    let joined_b = RankVector::from_ranks(b_ranks).map_err(|e| CliError::Data(e.to_string()))?;
    Ok((a.names.clone(), a.ranks.clone(), joined_b))
}

fn emit(rendered: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(rendered.as_bytes())
                .map_err(|e| CliError::Data(format!("cannot write to stdout: {e}")))
        }
    }
}

// Re-exported for integration tests.
pub use replicate::{run_replication, ReplicationReport};

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(names: &[&str], ranks: &[f64]) -> ReferenceRanking {
        ReferenceRanking {
            names: names.iter().map(|s| s.to_string()).collect(),
            ranks: RankVector::from_ranks(ranks.to_vec()).unwrap(),
            label: "test".to_string(),
        }
    }

    #[test]
    fn join_reorders_by_name() {
        let a = reference(&["x", "y", "z"], &[1.0, 2.0, 3.0]);
        let b = reference(&["z", "x", "y"], &[30.0, 10.0, 20.0]);
        let (names, ranks_a, ranks_b) = join_by_name(&a, &b).unwrap();
        assert_eq!(names, vec!["x", "y", "z"]);
        assert_eq!(ranks_a.as_slice(), &[1.0, 2.0, 3.0]);
        assert_eq!(ranks_b.as_slice(), &[10.0, 20.0, 30.0]);
    }

    #[test]
    fn join_lists_unmatched_names() {
        let a = reference(&["x", "y"], &[1.0, 2.0]);
        let b = reference(&["x", "w"], &[1.0, 2.0]);
        let err = join_by_name(&a, &b).unwrap_err();
        assert!(matches!(err, CliError::Data(_)));
        assert!(err.message().contains("y"));
        assert!(err.message().contains("w"));
    }

    #[test]
    fn unknown_builtin_is_a_data_error() {
        assert!(matches!(
            load_matrix_source("builtin:nope"),
            Err(CliError::Data(_))
        ));
        assert!(matches!(
            load_reference_source("builtin:nope"),
            Err(CliError::Data(_))
        ));
    }
}
