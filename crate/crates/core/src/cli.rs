//! Command-line front end.
//!
//! Exit codes: `0` success / positive verdict, `1` negative verdict (`solve`),
//! `2` invalid arguments or input, `3` I/O failure, `4` solver and oracle
//! disagree (`verify`).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bench::{run_bench, write_csv, BenchConfig};
use crate::bounds::bound_report;
use crate::error::{Error, Result};
use crate::generate::{generate, Family};
use crate::instance::Instance;
use crate::io::{load_instance, to_json};
use crate::piercing::check_minimality;
use crate::query::QueryCounter;
use crate::verdict::{oracle, solve, Verdict};

pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ipierce", version, about = "Interval coverage and two-line piercing with query counting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write an instance of a family as JSON.
    Generate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide an instance; exit 0 if covered / pierceable, 1 otherwise.
    Solve(InputArgs),
    /// Run the solver and the brute-force oracle and compare.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Also report pierceability of every leave-one-out subfamily.
        #[arg(long)]
        minimality: bool,
        /// Corrupt the solver verdict before comparing (self-test of the gate).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Sweep families and sizes, writing one CSV row per run.
    Bench {
        /// Family name; repeat or comma-separate for several.
        #[arg(long, value_parser = parse_family, value_delimiter = ',', required = true)]
        family: Vec<Family>,
        /// Size `N` or inclusive range `A..B`.
        #[arg(long, value_parser = parse_sizes)]
        n: RangeInclusive<usize>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fill the wall_time_ns column (otherwise 0, keeping output reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Print the lower bounds for size N.
    Bound {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Require lo < hi for every member interval.
    #[arg(long)]
    strict: bool,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_sizes(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad size `{t}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            Ok(a..=b)
        }
        None => num(s).map(|n| n..=n),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::Csv(c) if matches!(c.kind(), csv::ErrorKind::Io(_)) => EXIT_IO,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INVALID } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(input: &InputArgs) -> Result<Instance> {
    let instance = load_instance(&input.input)?;
    instance.validate(input.strict)?;
    Ok(instance)
}

fn emit(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate { family, n, seed, out: path } => {
            let text = to_json(&generate(family, n, seed)?);
            match path {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Solve(input) => {
            let instance = load(&input)?;
            let verdict = solve(&instance, &mut QueryCounter::new());
            emit(out, &verdict)?;
            Ok(if verdict.is_positive() { 0 } else { EXIT_NEGATIVE })
        }
        Command::Verify { input, minimality, inject_fault } => {
            let instance = load(&input)?;
            let mut verdict = solve(&instance, &mut QueryCounter::new());
            if inject_fault {
                corrupt(&mut verdict);
            }
            let reference = oracle(&instance);
            let agree = verdict.is_positive() == reference.is_positive();
            let sound = verdict.witness_is_sound(&instance) && reference.witness_is_sound(&instance);
            let mut report = json!({
                "problem": match instance { Instance::Coverage(_) => "coverage", Instance::Piercing(_) => "piercing" },
                "n": instance.len(),
                "solver": verdict,
                "oracle": reference,
                "agree": agree,
                "witnesses_sound": sound,
            });
            if let (true, Instance::Piercing(p)) = (minimality, &instance) {
                report["minimality"] = serde_json::to_value(check_minimality(p))?;
            }
            emit(out, &report)?;
            Ok(if agree && sound { 0 } else { EXIT_DISAGREE })
        }
        Command::Bench { family, n, trials, seed, out: path, timing } => {
            let config = BenchConfig { families: family, sizes: n.collect(), trials, seed, timing };
            let records = run_bench(&config)?;
            match path {
                Some(p) => write_csv(&records, fs::File::create(p)?)?,
                None => write_csv(&records, &mut *out)?,
            }
            Ok(0)
        }
        Command::Bound { n } => {
            emit(out, &bound_report(n))?;
            Ok(0)
        }
    }
}

fn corrupt(verdict: &mut Verdict) {
    match verdict {
        Verdict::Coverage(v) => v.covered = !v.covered,
        Verdict::Piercing(v) => v.pierceable = !v.pierceable,
    }
}
