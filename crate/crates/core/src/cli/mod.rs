//! Command-line front end.
//!
//! Exit codes: 0 success, 1 parse error, 2 domain error or failed
//! verification, 3 resource or search bound exceeded.

pub mod format;
pub mod parse;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::experiment::{additive_experiment, ufd_experiment, UfdConfig};
use crate::factor::{factor_grove, prime_trees, shape_factor_tree, Primality};
use crate::text::ParseError;
use crate::tree::enumerate_trees_with;
use crate::verify::{run_suite, table_rows, Suite, VerifyConfig};
use crate::word::universal_expression;
use crate::{Error, Limits};

use format::{format_tree, format_value, Style};
use parse::parse_expression;

#[derive(Debug, Parser)]
#[command(
    name = "arithmetree",
    version,
    about = "Arithmetic of planar binary trees and groves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct LimitArgs {
    /// Largest number of trees in any computed grove.
    #[arg(long, value_name = "N")]
    pub bound_count: Option<usize>,
    /// Node budget of a single division or decomposition search.
    #[arg(long, value_name = "N")]
    pub bound_nodes: Option<u64>,
}

impl LimitArgs {
    fn apply(&self, mut limits: Limits) -> Limits {
        if let Some(n) = self.bound_count {
            limits.max_count = n;
        }
        if let Some(n) = self.bound_nodes {
            limits.max_search_nodes = n;
        }
        limits
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression such as "L2 * R2" or "@2 + {L3, R3}".
    Eval {
        expression: String,
        #[arg(long, value_enum, default_value_t = Style::Canonical)]
        style: Style,
        /// Largest degree a result may have.
        #[arg(long, value_name = "N")]
        max_degree: Option<u32>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// List the trees of one degree in canonical order.
    Enumerate {
        degree: u32,
        /// Also print each tree's universal expression.
        #[arg(long)]
        words: bool,
        #[arg(long, value_enum, default_value_t = Style::Canonical)]
        style: Style,
    },
    /// Number of trees and groves of each degree.
    Table {
        #[arg(long, default_value_t = 7)]
        max: u32,
    },
    /// Factor the value of an expression into primes.
    Factor {
        expression: String,
        #[arg(long, value_enum, default_value_t = Style::Shorthand)]
        style: Style,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// List the prime trees of one degree.
    Primes {
        degree: u32,
        #[arg(long, value_enum, default_value_t = Style::Canonical)]
        style: Style,
    },
    /// Run a named verification suite, or all of them.
    Verify {
        #[arg(value_enum)]
        suite: Option<Suite>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random groves per degree in the factorization sweep.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Run a factorization or additive-decomposition sweep.
    Experiment {
        #[arg(value_enum)]
        kind: ExperimentKind,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Constructed products `x * y` per composite degree.
        #[arg(long, default_value_t = 500)]
        product_samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        limits: LimitArgs,
        /// Write the full report here instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentKind {
    Ufd,
    Additive,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Failed(String),
    /// Output is already printed; the search behind it was truncated.
    #[error("{0}")]
    Bounded(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Core(Error::Domain(_)) | CliError::Failed(_) => 2,
            CliError::Core(Error::Resource(_)) | CliError::Bounded(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn evaluate(text: &str, limits: &Limits) -> Result<crate::Grove, CliError> {
    Ok(parse_expression(text)?.evaluate(limits)?)
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval {
            expression,
            style,
            max_degree,
            limits,
        } => {
            let mut l = limits.apply(Limits::default());
            if let Some(d) = max_degree {
                l.max_degree = *d;
            }
            let g = evaluate(expression, &l)?;
            writeln!(out, "{}", format_value(&g, *style))?;
        }
        Command::Enumerate {
            degree,
            words,
            style,
        } => {
            for t in enumerate_trees_with(*degree, &Limits::default())? {
                let shown = format_tree(&t, *style);
                if *words && !t.is_leaf() {
                    writeln!(out, "{shown}\t{}", universal_expression(&t)?)?;
                } else {
                    writeln!(out, "{shown}")?;
                }
                if *style == Style::Ascii {
                    writeln!(out)?;
                }
            }
        }
        Command::Table { max } => {
            writeln!(out, "n\t#Y_n\t#𝕐_n")?;
            for row in table_rows(*max) {
                writeln!(out, "{}\t{}\t{}", row.degree, row.trees, row.groves)?;
            }
        }
        Command::Factor {
            expression,
            style,
            limits,
        } => {
            let l = limits.apply(Limits::default());
            factor_command(&evaluate(expression, &l)?, *style, &l, out)?;
        }
        Command::Primes { degree, style } => {
            for t in prime_trees(*degree, &Limits::default())? {
                writeln!(out, "{}", format_tree(&t, *style))?;
            }
        }
        Command::Verify {
            suite,
            seed,
            samples,
        } => {
            let config = VerifyConfig {
                seed: *seed,
                ufd_samples: *samples,
                limits: Limits::default(),
            };
            let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
            let mut failed = Vec::new();
            for s in suites {
                let report = run_suite(s, &config)?;
                let verdict = if report.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} ({:.2?})", s.name(), report.elapsed)?;
                write!(out, "{report}")?;
                if !report.passed() {
                    failed.push(s.name());
                }
            }
            if !failed.is_empty() {
                return Err(CliError::Failed(format!(
                    "failed suites: {}",
                    failed.join(", ")
                )));
            }
        }
        Command::Experiment {
            kind,
            max_degree,
            samples,
            product_samples,
            seed,
            limits,
            out: path,
        } => {
            let l = limits.apply(Limits::default());
            let mut file;
            let sink: &mut dyn Write = match path {
                Some(p) => {
                    file = BufWriter::new(File::create(p)?);
                    &mut file
                }
                None => out,
            };
            match kind {
                ExperimentKind::Ufd => {
                    let config = UfdConfig {
                        max_degree: *max_degree,
                        samples_per_degree: *samples,
                        product_samples_per_degree: *product_samples,
                        seed: *seed,
                        limits: l,
                    };
                    let report = ufd_experiment(&config)?;
                    report.write_to(sink)?;
                    sink.flush()?;
                    let bad = report.non_unique().count();
                    if bad > 0 {
                        return Err(CliError::Failed(format!(
                            "{bad} groves with non-unique factorization"
                        )));
                    }
                    let bounded: usize = report.summaries.iter().map(|s| s.bounded).sum();
                    if bounded > 0 {
                        return Err(CliError::Bounded(format!(
                            "{bounded} searches hit the bounds"
                        )));
                    }
                }
                ExperimentKind::Additive => {
                    let report = additive_experiment(*max_degree, &l)?;
                    report.write_to(sink)?;
                    sink.flush()?;
                }
            }
        }
    }
    Ok(())
}

fn factor_command(
    g: &crate::Grove,
    style: Style,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let show = |g: &crate::Grove| format_value(g, style);
    if let Some(t) = g.as_tree() {
        if t.degree() >= 2 {
            match shape_factor_tree(t) {
                Some(f) => writeln!(
                    out,
                    "{} * {}",
                    format_tree(&f.left_factor, style),
                    format_tree(&f.right_factor, style)
                )?,
                None => writeln!(out, "prime")?,
            }
            return Ok(());
        }
    }
    let report = factor_grove(g, limits)?;
    match report.primality {
        Primality::Unit => writeln!(out, "unit")?,
        Primality::Prime => writeln!(out, "prime")?,
        Primality::Unknown => writeln!(out, "unknown")?,
        Primality::Composite => {
            for seq in &report.factorizations {
                let parts: Vec<String> = seq.iter().map(show).collect();
                writeln!(out, "{}", parts.join(" * "))?;
            }
        }
    }
    if !report.complete {
        return Err(CliError::Bounded(
            "factor search hit the bounds; results may be partial".into(),
        ));
    }
    Ok(())
}
