//! Command-line front end.
//!
//! Exit status: 0 on success, 2 on parse or usage errors, 3 when the comb
//! budget is exceeded, 1 for any other failure. Reports go to standard
//! output, diagnostics to standard error.

pub mod format;
pub mod library;
pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::channel_game::Prior;
use crate::error::Error;
use crate::rtknowcaus::{Converter, DEFAULT_COMB_BUDGET};
use crate::{Distribution, Rational};

pub use format::{parse_resource_file, serialize_resource_file, ParseError, ParseErrorKind};

#[derive(Debug, Parser)]
#[command(
    name = "causinf",
    version,
    about = "Exact decisions and monotones for causal-influence resources"
)]
pub struct Cli {
    /// Maximum number of extremal combs enumerated per decision
    #[arg(long, global = true, default_value_t = DEFAULT_COMB_BUDGET)]
    pub budget: usize,

    /// Resource file (line-delimited JSON); `-` reads standard input
    #[arg(short = 'i', long = "input", global = true)]
    pub inputs: Vec<String>,

    /// Output format; `hasse` defaults to dot, everything else to report
    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Dot,
    Report,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters, bit monotones and image-size monotones
    Monotones { names: Vec<String> },
    /// Convertibility in both directions, with certificates
    Convert { source: String, target: String },
    /// Vertices of the downward closure
    Closure { name: String },
    /// Hasse diagram of the conversion order
    Hasse { names: Vec<String> },
    /// Guessing probability and postselected causal connection
    Game {
        name: String,
        /// `uniform` or comma-separated fractions
        #[arg(long, default_value = "uniform")]
        prior: String,
    },
    /// Average causal effect and the least causal weight over preimages
    Ace { name: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}: {error}")]
    Parse {
        source_name: String,
        error: ParseError,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Domain(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Domain(Error::ResourceBudgetExceeded { .. }) => 3,
            CliError::Domain(_) => 1,
        }
    }
}

/// Named resources from input files, falling back to the built-in library.
struct Catalog {
    inputs: Vec<(String, Distribution)>,
}

impl Catalog {
    fn load(paths: &[String], stdin: &mut dyn Read) -> Result<Self, CliError> {
        let mut inputs: Vec<(String, Distribution)> = Vec::new();
        for path in paths {
            let text = if path == "-" {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|source| CliError::Io {
                        path: "<stdin>".into(),
                        source,
                    })?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?
            };
            let parsed = parse_resource_file(&text).map_err(|error| CliError::Parse {
                source_name: if path == "-" {
                    "<stdin>".into()
                } else {
                    path.clone()
                },
                error,
            })?;
            for (name, d) in parsed {
                if inputs.iter().any(|(n, _)| *n == name) {
                    return Err(CliError::Usage(format!(
                        "resource {name} is defined in more than one input"
                    )));
                }
                inputs.push((name, d));
            }
        }
        Ok(Self { inputs })
    }

    fn get(&self, name: &str) -> Result<Distribution, CliError> {
        self.inputs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d.clone())
            .or_else(|| library::get(name))
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown resource {name}; built-ins are {}",
                    library::NAMES.join(", ")
                ))
            })
    }

    /// The named resources, or every input resource when no names are given.
    fn select(&self, names: &[String]) -> Result<Vec<(String, Distribution)>, CliError> {
        if names.is_empty() {
            if self.inputs.is_empty() {
                return Err(CliError::Usage("no resources given".into()));
            }
            return Ok(self.inputs.clone());
        }
        names
            .iter()
            .map(|n| Ok((n.clone(), self.get(n)?)))
            .collect()
    }
}

fn parse_prior(text: &str, size: usize) -> Result<Prior<Rational>, CliError> {
    if text == "uniform" {
        return Ok(Prior::uniform(size)?);
    }
    let weights = text
        .split(',')
        .map(|w| {
            Rational::from_str(w.trim())
                .map_err(|_| CliError::Usage(format!("malformed prior weight {w:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Prior::new(weights).map_err(|e| CliError::Usage(format!("invalid prior: {e}")))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Runs one invocation and returns the rendered output.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let catalog = Catalog::load(&cli.inputs, stdin)?;
    let converter = Converter::new(cli.budget);
    let format = cli.format.unwrap_or(match cli.command {
        Command::Hasse { .. } => OutputFormat::Dot,
        _ => OutputFormat::Report,
    });
    if format == OutputFormat::Dot && !matches!(cli.command, Command::Hasse { .. }) {
        return Err(CliError::Usage(
            "dot output is only available for hasse".into(),
        ));
    }
    let out = match &cli.command {
        Command::Monotones { names } => {
            let rows: Vec<_> = catalog
                .select(names)?
                .iter()
                .map(|(n, d)| report::monotones(n, d))
                .collect();
            pretty(&serde_json::json!({ "resources": rows }))
        }
        Command::Convert { source, target } => {
            let (a, b) = (catalog.get(source)?, catalog.get(target)?);
            pretty(&report::convert(&converter, (source, &a), (target, &b))?)
        }
        Command::Closure { name } => {
            pretty(&report::closure(&converter, name, &catalog.get(name)?)?)
        }
        Command::Hasse { names } => {
            let graph = converter.hasse(&catalog.select(names)?)?;
            match format {
                OutputFormat::Dot => report::hasse_dot(&graph),
                OutputFormat::Report => pretty(&report::hasse_report(&graph)),
            }
        }
        Command::Game { name, prior } => {
            let d = catalog.get(name)?;
            let prior = parse_prior(prior, d.domain_size())?;
            pretty(&report::game(name, &d, &prior)?)
        }
        Command::Ace { name } => pretty(&report::ace_report(name, &catalog.get(name)?)?),
    };
    Ok(out)
}

/// Parses arguments, runs, writes output and diagnostics, returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return e.exit_code();
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write output: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
