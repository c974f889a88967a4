//! The `peano` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use peano_core::arith::{classical_goldbach_sentence, goldbach_sentence};
use peano_core::goldbach::partitions;
use peano_core::kernel::{check_proof, discover_partial};
use peano_core::models::{check_axioms, coded_model, eval_with_indices, halving_sequence, limit_table};
use peano_core::syntax::{parse_core, print_wff, VarIndex, Wff};
use serde_json::Value;

use crate::proof_file::{parse_proof_file, print_proof};
use crate::report;
use crate::scan::parallel_scan;
use crate::table::{write_limit_csv, write_scan_csv};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// A rejected proof, failed discovery, False axiom or unverified scan.
pub const EXIT_DOMAIN: i32 = 1;
/// Bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "peano",
    version,
    about = "Proof checking, Goldbach scans and coded models for first-order arithmetic"
)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a formula in canonical core form.
    Parse {
        wff: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Print with the abbreviations restored.
        #[arg(long)]
        sugar: bool,
    },
    /// Check a justified proof file (`-` reads standard input).
    Check { proof: PathBuf },
    /// Fill in the `?` justifications of a proof file.
    Discover { proof: PathBuf },
    /// Print a named sentence.
    Sentence {
        #[command(subcommand)]
        which: SentenceCommand,
    },
    Goldbach {
        #[command(subcommand)]
        command: GoldbachCommand,
    },
    Model {
        #[command(subcommand)]
        command: ModelCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum SentenceCommand {
    /// Goldbach's statement over 𝔑, or for all evens above 2 with --classical.
    Goldbach {
        #[arg(long)]
        classical: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum GoldbachCommand {
    /// Check every member of 𝔑 up to the limit for a partition into two primes.
    Scan {
        #[arg(long)]
        limit: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        chunks: Option<usize>,
        /// Write `alpha,count` rows instead of the summary.
        #[arg(long)]
        csv: bool,
    },
    /// List the partitions of an even number into two primes.
    Partitions { alpha: u64 },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub alpha: u64,
    /// A rational at least 1: `2`, `3/2` or `1.5`.
    #[arg(long, value_parser = parse_ratio)]
    pub u: Ratio<u64>,
    #[arg(long)]
    pub bound: u64,
}

#[derive(Debug, Subcommand)]
pub enum ModelCommand {
    /// Evaluate N1–N6 in I_(alpha,u).
    Axioms {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Evaluate a formula in I_(alpha,u).
    Eval {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        wff: Option<String>,
        #[arg(long)]
        wff_file: Option<PathBuf>,
        /// Indices of the free variables, e.g. `x1=3,x2=5`.
        #[arg(long, value_parser = parse_env)]
        env: Option<BTreeMap<VarIndex, u64>>,
    },
    /// Deviations |ψ(n) − n| along u = 1 + 2^-k, k = 1..steps, then u = 1.
    Limits {
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        steps: u32,
    },
}

/// Parses `p/q`, a decimal such as `1.25`, or an integer.
pub fn parse_ratio(s: &str) -> Result<Ratio<u64>, String> {
    let bad = || format!("`{s}` is not a nonnegative rational");
    let int = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q == 0 {
            return Err(format!("`{s}` has a zero denominator"));
        }
        return Ok(Ratio::new(int(p)?, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let scale = 10u64.pow(frac.len() as u32);
        let whole = if whole.is_empty() { 0 } else { int(whole)? };
        let numer = whole.checked_mul(scale).and_then(|w| w.checked_add(int(frac).ok()?)).ok_or_else(bad)?;
        return Ok(Ratio::new(numer, scale));
    }
    Ok(Ratio::from_integer(int(s)?))
}

/// Parses `x1=3,x2=5`.
pub fn parse_env(s: &str) -> Result<BTreeMap<VarIndex, u64>, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let (var, val) = pair.split_once('=').ok_or_else(|| format!("`{pair}` is not `xN=value`"))?;
            let v = var
                .trim()
                .strip_prefix('x')
                .and_then(|n| n.parse::<VarIndex>().ok())
                .filter(|n| *n > 0)
                .ok_or_else(|| format!("`{var}` is not a variable"))?;
            let n = val.trim().parse::<u64>().map_err(|_| format!("`{val}` is not a natural number"))?;
            Ok((v, n))
        })
        .collect()
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Exactly one of an inline formula and a file.
fn formula_source(inline: Option<String>, file: Option<&Path>) -> Result<Wff, Failure> {
    let text = match (inline, file) {
        (Some(_), Some(_)) => return Err(usage("give the formula inline or as a file, not both")),
        (None, None) => return Err(usage("no formula given")),
        (Some(t), None) => t,
        (None, Some(p)) => read_input(p)?,
    };
    parse_core(text.trim()).map_err(|e| usage(format!("cannot parse formula: {e}")))
}

fn emit_json(out: &mut dyn Write, doc: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Parse { wff, file, sugar } => {
            let w = formula_source(wff, file.as_deref())?;
            if json {
                emit_json(out, &report::parse_doc(&w))?;
            } else {
                writeln!(out, "{}", print_wff(&w, sugar))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { proof } => {
            let file = parse_proof_file(&read_input(&proof)?).map_err(usage)?;
            let p = file.to_proof();
            let verdict = check_proof(&p);
            if json {
                emit_json(out, &report::check_doc(&p, &verdict))?;
            } else {
                for l in &verdict.per_line {
                    match &l.result {
                        Ok(()) => writeln!(out, "{}. ok", l.line)?,
                        Err(e) => writeln!(out, "{}. error: {e}", l.line)?,
                    }
                }
                match verdict.first_failure() {
                    None if verdict.accepted() => writeln!(out, "accepted ({} lines)", p.lines.len())?,
                    None => writeln!(out, "rejected: empty proof")?,
                    Some(f) => writeln!(out, "rejected (first failure at line {})", f.line)?,
                }
            }
            Ok(if verdict.accepted() { EXIT_OK } else { EXIT_DOMAIN })
        }
        Command::Discover { proof } => {
            let file = parse_proof_file(&read_input(&proof)?).map_err(usage)?;
            let name = file.theory.name().to_string();
            let result = discover_partial(&file.theory, file.lines);
            if json {
                emit_json(out, &report::discover_doc(&name, &result))?;
            } else {
                match &result {
                    Ok(p) => write!(out, "{}", print_proof(p))?,
                    Err(f) => {
                        for (line, why) in &f.unjustified {
                            writeln!(out, "line {line}: {why}")?;
                        }
                    }
                }
            }
            Ok(if result.is_ok() { EXIT_OK } else { EXIT_DOMAIN })
        }
        Command::Sentence { which: SentenceCommand::Goldbach { classical } } => {
            let w = if classical { classical_goldbach_sentence() } else { goldbach_sentence() };
            if json {
                emit_json(out, &report::sentence_doc(&w, classical))?;
            } else {
                writeln!(out, "{}", print_wff(&w, false))?;
            }
            Ok(EXIT_OK)
        }
        Command::Goldbach { command: GoldbachCommand::Scan { limit, chunks, csv } } => {
            let chunks = chunks.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1);
            let r = parallel_scan(limit, chunks);
            if json {
                emit_json(out, &report::scan_doc(&r))?;
            } else if csv {
                write_scan_csv(&mut *out, &r).map_err(|e| Failure::Io(e.into()))?;
            } else {
                write!(out, "limit {limit}: {} members of 𝔑, ", r.members.len())?;
                match r.first_failure {
                    None => writeln!(out, "verified")?,
                    Some(a) => writeln!(out, "first failure at {a}")?,
                }
            }
            Ok(if r.verified { EXIT_OK } else { EXIT_DOMAIN })
        }
        Command::Goldbach { command: GoldbachCommand::Partitions { alpha } } => {
            let parts = partitions(alpha).map_err(usage)?;
            if json {
                emit_json(out, &report::partitions_doc(alpha, &parts))?;
            } else {
                let text: Vec<String> = parts.iter().map(|(p, q)| format!("({p},{q})")).collect();
                writeln!(out, "{}", text.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Model { command: ModelCommand::Axioms { model } } => {
            let m = coded_model(model.alpha, model.u).map_err(usage)?;
            let checks = check_axioms(&m, model.bound).map_err(usage)?;
            if json {
                emit_json(out, &report::axioms_doc(model.alpha, model.u, model.bound, &checks))?;
            } else {
                for c in &checks {
                    writeln!(out, "{}: {}", c.axiom, c.verdict)?;
                }
            }
            Ok(if checks.iter().any(|c| c.verdict.is_false()) { EXIT_DOMAIN } else { EXIT_OK })
        }
        Command::Model { command: ModelCommand::Eval { model, wff, wff_file, env } } => {
            let w = formula_source(wff, wff_file.as_deref())?;
            let m = coded_model(model.alpha, model.u).map_err(usage)?;
            let v = eval_with_indices(&m, &w, &env.unwrap_or_default(), model.bound).map_err(usage)?;
            if json {
                emit_json(out, &report::eval_doc(model.alpha, model.u, model.bound, &w, &v))?;
            } else {
                writeln!(out, "{v}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Model { command: ModelCommand::Limits { alpha, nmax, steps } } => {
            if steps >= 63 {
                return Err(usage("--steps must be below 63"));
            }
            let rows = limit_table(alpha, nmax, &halving_sequence(steps)).map_err(usage)?;
            if json {
                emit_json(out, &report::limits_doc(alpha, &rows))?;
            } else {
                write_limit_csv(&mut *out, alpha, &rows).map_err(|e| Failure::Io(e.into()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
