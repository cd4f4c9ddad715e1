//! Command-line surface and flag parsing.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use mcdm_core::matrix::Direction;
use mcdm_core::methods::Method;
use mcdm_core::rank::TiePolicy;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "mcdm",
    version,
    about = "Rank alternatives with MOORA, RAM, FUCA and CURLI, compare rank vectors, and replicate the bundled bank case study"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank the alternatives of a decision matrix.
    Rank {
        /// Matrix CSV path, or `builtin:banks` for the bundled dataset.
        #[arg(long)]
        input: String,
        /// Comma-separated subset of moora,ram,fuca,curli (default all).
        #[arg(long, default_value = "moora,ram,fuca,curli")]
        method: String,
        /// Comma-separated positive weights, one per criterion
        /// (default: equal weights).
        #[arg(long)]
        weights: Option<String>,
        /// Comma-separated `benefit`/`cost` tokens, one per criterion;
        /// a single token applies to every criterion (default: all cost).
        #[arg(long)]
        directions: Option<String>,
        /// Tie policy for every ranking step.
        #[arg(long, value_enum, default_value_t = TiesArg::Competition)]
        ties: TiesArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        /// Write to this path instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare two rank vectors joined by alternative name.
    Compare {
        /// Ranking CSV path (`alternative,rank`), or `builtin:camels`.
        #[arg(long)]
        input: String,
        /// Ranking CSV path (`alternative,rank`), or `builtin:camels`.
        #[arg(long)]
        reference: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-run the bundled bank case study and check every published
    /// value; exits 3 if any tolerance is violated.
    Replicate {
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TiesArg {
    Competition,
    Ordinal,
    Average,
}

impl From<TiesArg> for TiePolicy {
    fn from(arg: TiesArg) -> TiePolicy {
        match arg {
            TiesArg::Competition => TiePolicy::Competition,
            TiesArg::Ordinal => TiePolicy::Ordinal,
            TiesArg::Average => TiePolicy::Average,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Csv,
    Json,
}

/// Parses the `--method` list, preserving order and rejecting
/// duplicates.
pub fn parse_methods(list: &str) -> Result<Vec<Method>, CliError> {
    let mut methods = Vec::new();
    for token in list.split(',') {
        let method: Method = token
            .parse()
            .map_err(|e| CliError::Config(format!("{e}")))?;
        if methods.contains(&method) {
            return Err(CliError::Config(format!(
                "method {method} listed more than once"
            )));
        }
        methods.push(method);
    }
    if methods.is_empty() {
        return Err(CliError::Config("no method selected".to_string()));
    }
    Ok(methods)
}

/// Parses the `--weights` list; the count must match the criterion
/// count and every weight must be a positive finite number.
pub fn parse_weights(list: &str, criterion_count: usize) -> Result<Vec<f64>, CliError> {
    let weights: Vec<f64> = list
        .split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<f64>()
                .ok()
                .filter(|w| w.is_finite() && *w > 0.0)
                .ok_or_else(|| {
                    CliError::Config(format!(
                        "invalid weight {token:?}; weights must be positive numbers"
                    ))
                })
        })
        .collect::<Result<_, _>>()?;
    if weights.len() != criterion_count {
        return Err(CliError::Config(format!(
            "weight count mismatch: got {} weight(s) for {} criteria",
            weights.len(),
            criterion_count
        )));
    }
    Ok(weights)
}

/// Parses the `--directions` list. A single token is broadcast to every
/// criterion; otherwise the count must match the criterion count.
pub fn parse_directions(list: &str, criterion_count: usize) -> Result<Vec<Direction>, CliError> {
    let tokens: Vec<&str> = list.split(',').map(str::trim).collect();
    let parse_one = |token: &str| match token.to_ascii_lowercase().as_str() {
        "benefit" => Ok(Direction::Benefit),
        "cost" => Ok(Direction::Cost),
        _ => Err(CliError::Config(format!(
            "invalid direction {token:?}; expected benefit or cost"
        ))),
    };
    if tokens.len() == 1 {
        let direction = parse_one(tokens[0])?;
        return Ok(vec![direction; criterion_count]);
    }
    let directions: Vec<Direction> = tokens
        .into_iter()
        .map(parse_one)
        .collect::<Result<_, _>>()?;
    if directions.len() != criterion_count {
        return Err(CliError::Config(format!(
            "direction count mismatch: got {} direction(s) for {} criteria",
            directions.len(),
            criterion_count
        )));
    }
    Ok(directions)
}
