use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use credal_af::{ArgumentId, Semantics, DEFAULT_ARGUMENT_CAP, TOLERANCE};

#[derive(Debug, Parser)]
#[command(
    name = "credal-af",
    version,
    about = "Dung extensions with credal-set probability bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    command: CommandName,

    /// Framework file in .caf format.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Semantics: cf, ad, co, pr, gr or st.
    #[arg(long, global = true, default_value = "gr", value_parser = parse_semantics)]
    semantics: Semantics,

    /// Analyse one explicit conflict-free set instead, e.g. `A,F,H`.
    #[arg(long, global = true, value_name = "LIST")]
    set: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cross-check every interval against the per-agent oracle.
    #[arg(long, global = true)]
    oracle: bool,

    /// Make `check` fail when diagnostics report problems.
    #[arg(long, global = true)]
    strict: bool,

    /// Largest framework accepted for subset enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ARGUMENT_CAP,
          value_parser = parse_cap)]
    max_args: usize,

    /// Absolute tolerance for oracle comparisons.
    #[arg(long, global = true, default_value_t = TOLERANCE, value_parser = parse_tolerance)]
    tolerance: f64,

    /// Print the reference intervals of the diagnosis example next to the
    /// computed ones (bounds only; ignores --input).
    #[arg(long, global = true)]
    paper_fixtures: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum CommandName {
    /// List all extensions under a semantics.
    Solve,
    /// Lower/upper probability of each extension.
    Bounds,
    /// Rationality, maximality/uniformity and causality diagnostics.
    Check,
    /// Graphviz rendering of attacks (solid) and causal edges (dashed).
    ExportDot,
    /// Bounds ordered by a heuristic interval ranking.
    Rank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfiguration {
    pub command: CommandName,
    pub input: Option<PathBuf>,
    pub semantics: Semantics,
    pub set: Option<Vec<ArgumentId>>,
    pub format: Format,
    pub oracle: bool,
    pub strict: bool,
    pub max_args: usize,
    pub tolerance: f64,
    pub paper_fixtures: bool,
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    s.parse()
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(_) => Err(format!("{s:?} is not a positive integer")),
    }
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err("tolerance must be positive".into())
    }
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfiguration, String> {
        let set = self
            .set
            .map(|list| {
                list.split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| ArgumentId::new(s).map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        if self.paper_fixtures && self.command != CommandName::Bounds {
            return Err("--paper-fixtures only applies to `bounds`".into());
        }
        if self.input.is_none() && !self.paper_fixtures {
            return Err("--input PATH is required".into());
        }
        Ok(RunConfiguration {
            command: self.command,
            input: self.input,
            semantics: self.semantics,
            set,
            format: self.format,
            oracle: self.oracle,
            strict: self.strict,
            max_args: self.max_args,
            tolerance: self.tolerance,
            paper_fixtures: self.paper_fixtures,
        })
    }
}
