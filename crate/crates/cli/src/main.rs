//! `liouvillian`: decide liouvillian solvability of first-order equations
//! from the command line.
//!
//! Exit codes: 0 verdicts produced, 1 parse or usage error, 2 precondition
//! violated, 3 internal inconsistency. In batch mode the largest per-line
//! code wins.

use std::fs;
use std::io::{self, Write};
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};

mod human;
mod report;

use report::{Options, Procedure, Report};

#[derive(Parser, Debug)]
#[command(name = "liouvillian", version, about = "Exact decision procedures for liouvillian solutions of first-order ODEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit one JSON object per input instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Re-check every emitted witness by exact substitution.
    #[arg(long, global = true)]
    verify: bool,

    /// Batch file: one expression (or coefficient list) per line, '#' starts a comment.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Include witness renderings (default).
    #[arg(long, global = true, overrides_with = "no_witness")]
    witness: bool,

    /// Omit witness renderings.
    #[arg(long = "no-witness", global = true, overrides_with = "witness")]
    no_witness: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// y' = R(y) with R in Q(y).
    Autonomous {
        #[arg(value_name = "R(y)", allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// (y')^2 = P(y) with P in Q[y].
    Square {
        #[arg(value_name = "P(y)", allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// y' = a1 y + a2 y^2 + ... + an y^n with ai in Q(x).
    Abel {
        /// Coefficients a1;a2;...;an as x-expressions.
        #[arg(long, value_name = "a1;a2;...", allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Coefficient of y^0; must be zero.
        #[arg(long, value_name = "a0", allow_hyphen_values = true)]
        constant_term: Option<String>,
    },
    /// Degree test for y' = P(y) in iterated antiderivative towers.
    Degbound {
        #[arg(value_name = "P(y)", allow_hyphen_values = true)]
        expr: Option<String>,
        /// Coefficient field of P.
        #[arg(long, value_enum, default_value_t = CoeffField::Q)]
        coeff_field: CoeffField,
    },
    /// Rational antiderivative of f in Q(x).
    Antider {
        #[arg(value_name = "f(x)", allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Algebraic g with g'/g = f for f in Q(x).
    Logderiv {
        #[arg(value_name = "f(x)", allow_hyphen_values = true)]
        expr: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CoeffField {
    /// Rational constants.
    Q,
    /// Rational functions in x.
    Qx,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    let opts = Options { verify: cli.verify, witness: !cli.no_witness };
    let (procedure, single) = match cli.command {
        Command::Autonomous { expr } => (Procedure::Autonomous, expr),
        Command::Square { expr } => (Procedure::Square, expr),
        Command::Abel { coeffs, constant_term } => (Procedure::Abel { constant_term }, coeffs),
        Command::Degbound { expr, coeff_field } => {
            (Procedure::Degbound { over_qx: coeff_field == CoeffField::Qx }, expr)
        }
        Command::Antider { expr } => (Procedure::Antider, expr),
        Command::Logderiv { expr } => (Procedure::Logderiv, expr),
    };

    let reports = match (single, cli.input) {
        (Some(text), None) => vec![report::decide(&procedure, &text, &opts)],
        (None, Some(path)) => match fs::read_to_string(&path) {
            Ok(contents) => batch(&procedure, &contents, &opts),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return 1;
            }
        },
        (Some(_), Some(_)) => {
            eprintln!("error: give either an expression or --input, not both");
            return 1;
        }
        (None, None) => {
            eprintln!("error: missing expression (or --input FILE)");
            return 1;
        }
    };

    let mut out = io::stdout().lock();
    for r in &reports {
        let written = if cli.json {
            serde_json::to_string(r).map_err(io::Error::from).and_then(|s| writeln!(out, "{s}"))
        } else {
            write!(out, "{}", human::render(r))
        };
        if written.is_err() {
            return 3;
        }
    }
    reports.iter().map(|r| r.exit).max().unwrap_or(0)
}

/// Decides each non-blank, non-comment line; reports keep input order.
fn batch(procedure: &Procedure, contents: &str, opts: &Options) -> Vec<Report> {
    let lines: Vec<(usize, &str)> = contents
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = lines.len().div_ceil(workers).max(1);
    let one = |&(n, text): &(usize, &str)| {
        panic::catch_unwind(|| Report { line: Some(n), ..report::decide(procedure, text, opts) })
            .unwrap_or_else(|_| Report::panicked(procedure, text, n))
    };
    thread::scope(|s| {
        let handles: Vec<_> = lines.chunks(chunk).map(|part| s.spawn(move || part.iter().map(one).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker catches panics")).collect()
    })
}
