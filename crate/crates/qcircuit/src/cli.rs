//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage (bad flags, unknown dialect or demo,
//! unreadable input), 2 parse error, 3 validation or simulation error.
//! Payload goes to stdout; diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use qcircuit_core::algos::{build_bell, build_shor15, run_shor15_pipeline, FactorReport};
use qcircuit_core::emit::{print_circuit, translate, Dialect};
use qcircuit_core::sim::{Counts, DEFAULT_SHOTS};
use qcircuit_core::{Circuit, SimError};
use serde::Serialize;
use thiserror::Error;

use crate::dsl::{self, ParseError};
use crate::parallel::run_shots_parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

const HIST_WIDTH: u64 = 50;

#[derive(Debug, Parser)]
#[command(
    name = "qcircuit",
    version,
    about = "Build, translate and simulate quantum circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Counts,
    Json,
    Hist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Demo {
    Bell,
    Shor15,
}

#[derive(Debug, clap::Args)]
struct Sampling {
    /// Number of shots
    #[arg(long, default_value_t = DEFAULT_SHOTS, value_parser = clap::value_parser!(u64).range(1..))]
    shots: u64,
    /// Seed of the shot random streams
    #[arg(long, default_value_t = 0, conflicts_with = "random")]
    seed: u64,
    /// Draw the seed from system entropy and report it on stderr
    #[arg(long)]
    random: bool,
}

impl Sampling {
    fn resolve_seed(&self, stderr: &mut dyn Write) -> u64 {
        if self.random {
            let seed = rand::random();
            let _ = writeln!(stderr, "seed: {seed}");
            seed
        } else {
            self.seed
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit source for a target framework
    Translate {
        /// Circuit file, or `-` for stdin
        input: String,
        #[arg(long = "to", value_parser = dialect_parser())]
        to: Dialect,
    },
    /// Draw the circuit as ASCII art
    Print {
        /// Circuit file, or `-` for stdin
        input: String,
    },
    /// Sample measurement outcomes
    Simulate {
        /// Circuit file, or `-` for stdin
        input: String,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, value_enum, default_value_t = OutputFormat::Counts)]
        format: OutputFormat,
    },
    /// Print a built-in circuit in the .qc format
    Demo {
        #[arg(value_enum)]
        name: Demo,
    },
    /// Factor 15 with the compiled Shor circuit
    Factor15 {
        #[command(flatten)]
        sampling: Sampling,
    },
}

fn dialect_parser() -> impl TypedValueParser<Value = Dialect> {
    PossibleValuesParser::new(Dialect::ALL.map(Dialect::name))
        .map(|s| s.parse::<Dialect>().expect("restricted to known names"))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Sim(_) => EXIT_RUNTIME,
        }
    }
}

/// Run the CLI against explicit streams and return the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    match execute(cli.command, stdin, stderr) {
        Ok(payload) => match stdout.write_all(payload.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(input: &str, stdin: &mut dyn Read) -> Result<Circuit, CliError> {
    let text = if input == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|source| CliError::Io {
            path: input.into(),
            source,
        })?
    };
    Ok(dsl::parse(&text)?)
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> Result<String, CliError> {
    match command {
        Command::Translate { input, to } => Ok(translate(&load(&input, stdin)?, to).source),
        Command::Print { input } => Ok(print_circuit(&load(&input, stdin)?)),
        Command::Simulate {
            input,
            sampling,
            format,
        } => {
            let circuit = load(&input, stdin)?;
            let seed = sampling.resolve_seed(stderr);
            let counts = run_shots_parallel(&circuit, sampling.shots, seed)?;
            Ok(match format {
                OutputFormat::Counts => counts_lines(&counts),
                OutputFormat::Json => counts_json(&counts, seed),
                OutputFormat::Hist => histogram(&counts),
            })
        }
        Command::Demo { name } => Ok(dsl::serialize(&match name {
            Demo::Bell => build_bell(),
            Demo::Shor15 => build_shor15(),
        })),
        Command::Factor15 { sampling } => {
            let seed = sampling.resolve_seed(stderr);
            let report = run_shor15_pipeline(sampling.shots, seed)?;
            Ok(factor_report(&report))
        }
    }
}

/// `bitstring count`, one line per key in ascending order.
pub fn counts_lines(counts: &Counts) -> String {
    let mut out = String::new();
    for (k, n) in counts.iter() {
        let _ = writeln!(out, "{k} {n}");
    }
    out
}

#[derive(Serialize)]
struct CountsJson<'a> {
    shots: u64,
    seed: u64,
    counts: &'a std::collections::BTreeMap<String, u64>,
}

/// `{"shots":N,"seed":S,"counts":{...}}` with keys in ascending order.
pub fn counts_json(counts: &Counts, seed: u64) -> String {
    let doc = CountsJson {
        shots: counts.shots(),
        seed,
        counts: counts.as_map(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// One bar per key, the largest count spanning 50 columns.
pub fn histogram(counts: &Counts) -> String {
    let max = counts.iter().map(|(_, n)| n).max().unwrap_or(0);
    let mut out = String::new();
    for (k, n) in counts.iter() {
        let len = (n * HIST_WIDTH + max / 2)
            .checked_div(max)
            .map_or(0, |l| l.max(1) as usize);
        let bar = "#".repeat(len);
        let _ = writeln!(out, "{k} |{bar:<width$}| {n}", width = HIST_WIDTH as usize);
    }
    out
}

fn braced(values: impl IntoIterator<Item = u64>) -> String {
    let items: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn factor_report(report: &FactorReport) -> String {
    let mut out = String::from("counts:\n");
    out.push_str(&counts_lines(&report.counts));
    let _ = writeln!(
        out,
        "measured values: {}",
        braced(report.measured_values.iter().copied())
    );
    for base in &report.bases {
        let _ = write!(out, "a = {}:", base.a);
        for (i, t) in base.trials.iter().enumerate() {
            let verdict = if t.accepted { "period" } else { "rejected" };
            let sep = if i == 0 { " " } else { ", " };
            let _ = write!(out, "{sep}m = {} -> r = {} ({verdict})", t.m, t.r);
        }
        if base.found_period() {
            out.push('\n');
        } else {
            let sep = if base.trials.is_empty() { " " } else { "; " };
            let _ = writeln!(out, "{sep}Did not find a period.");
        }
    }
    let _ = writeln!(out, "factors: {}", braced(report.factors.iter().copied()));
    let primes = report.prime_factors();
    if !primes.is_empty() {
        let _ = writeln!(out, "prime factors: {}", braced(primes));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(entries: &[(&str, u64)]) -> Counts {
        entries.iter().map(|&(k, n)| (k.to_string(), n)).collect()
    }

    #[test]
    fn counts_format() {
        let c = counts(&[("11", 502), ("00", 498)]);
        assert_eq!(counts_lines(&c), "00 498\n11 502\n");
    }

    #[test]
    fn json_format() {
        let c = counts(&[("11", 2), ("00", 1)]);
        assert_eq!(
            counts_json(&c, 7),
            "{\"shots\":3,\"seed\":7,\"counts\":{\"00\":1,\"11\":2}}\n"
        );
    }

    #[test]
    fn histogram_scales_to_fifty() {
        let c = counts(&[("0", 100), ("1", 50), ("x", 1)]);
        let out = histogram(&c);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], format!("0 |{}| 100", "#".repeat(50)));
        assert_eq!(
            lines[1],
            format!("1 |{}{}| 50", "#".repeat(25), " ".repeat(25))
        );
        assert_eq!(lines[2], format!("x |#{}| 1", " ".repeat(49)));
    }
}
