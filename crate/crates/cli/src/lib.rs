//! Command-line front end for `rigged-core`.
//!
//! [`run`] parses arguments and returns the exit code and the text destined
//! for stdout, so the binary and the tests drive the same code path.
//! Progress goes to stderr, and only when stderr is a terminal.

use std::io::IsTerminal;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use rigged_core::bijection::verify::{
    verify_bijection_cached, verify_grading_cached, verify_lower_decomposition_cached, verify_recursion_cached,
    verify_recursion_faulty, verify_upper_decomposition_cached, SetCache,
};
use rigged_core::characters::{char_r, char_recursion_check, fermionic_char, fermionic_check, sl2_char, SL2_NAMES};
use rigged_core::json::{EnumDoc, PieceDoc};
use rigged_core::report::Report;
use rigged_core::riggedsets::{enumerate_r, weight_bounds};
use rigged_core::{LaurentPoly, Params};

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "RIGGED_JOBS";

#[derive(Debug, Parser)]
#[command(
    name = "rigged",
    version,
    about = "Rigged partitions, fermionic characters and their verifiers"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Worker threads; 0 means one per core.
    #[arg(long, env = JOBS_ENV, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the rigged set, either one graded piece or all of them.
    Enum(EnumArgs),
    /// Fermionic character (l3 = min(l1, l2)).
    Char(CharArgs),
    /// Character by enumerating the rigged set.
    CharBruteforce(BruteArgs),
    /// Character of the sl2 coinvariants.
    Sl2Char(Sl2Args),
    /// Exhaustively verify an identity over a grid.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
struct EnumArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l1: i64,
    #[arg(long)]
    l2: i64,
    #[arg(long)]
    l3: i64,
    #[arg(long = "M", value_name = "M")]
    big_m: i64,
    #[arg(long = "N", value_name = "N")]
    big_n: i64,
    /// Restrict to one piece; requires --n.
    #[arg(long, requires = "n")]
    m: Option<i64>,
    #[arg(long, requires = "m")]
    n: Option<i64>,
}

#[derive(Debug, Args)]
struct CharArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l1: i64,
    #[arg(long)]
    l2: i64,
    #[arg(long = "M", value_name = "M")]
    big_m: i64,
    #[arg(long = "N", value_name = "N")]
    big_n: i64,
}

#[derive(Debug, Args)]
struct BruteArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l1: i64,
    #[arg(long)]
    l2: i64,
    /// Defaults to min(l1, l2).
    #[arg(long)]
    l3: Option<i64>,
    #[arg(long = "M", value_name = "M")]
    big_m: i64,
    #[arg(long = "N", value_name = "N")]
    big_n: i64,
}

#[derive(Debug, Args)]
struct Sl2Args {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: i64,
    #[arg(long = "M", value_name = "M")]
    big_m: i64,
    #[arg(long = "N", value_name = "N")]
    big_n: i64,
}

#[derive(Debug, Clone, Copy, Args)]
struct Grid {
    #[arg(long)]
    max_k: usize,
    #[arg(long = "max-M", value_name = "M")]
    max_big_m: i64,
    #[arg(long = "max-N", value_name = "N")]
    max_big_n: i64,
}

#[derive(Debug, Clone, Copy, Args)]
struct WeightGrid {
    #[command(flatten)]
    grid: Grid,
    #[arg(long)]
    max_weight: i64,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Cardinality recursion over N >= 1.
    Recursion {
        #[command(flatten)]
        grid: WeightGrid,
        #[arg(long, hide = true, default_value_t = 0)]
        inject_tau_fault: i64,
    },
    /// Lower decomposition, every element covered once.
    LowerDecomp(WeightGrid),
    /// Upper decomposition over every (l1, a, c); --max-N bounds the upper cutoff.
    UpperDecomp(WeightGrid),
    /// The map m_{I,J} is a bijection onto the lower subset.
    Bijection(WeightGrid),
    /// Graded sums of the upper and lower subsets agree after the twist.
    Grading(WeightGrid),
    /// Fermionic formula against enumeration.
    Fermionic(Grid),
    /// Character recursion over N >= 1.
    CharRecursion(Grid),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                return Outcome {
                    code,
                    stdout: e.to_string(),
                };
            }
            eprint!("{e}");
            return Outcome {
                code,
                stdout: String::new(),
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool,
        Err(e) => return usage(e),
    };
    let result = pool.install(|| execute(&cli));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &outcome.stdout) {
            Ok(()) => Outcome {
                code: outcome.code,
                stdout: String::new(),
            },
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                Outcome {
                    code: 2,
                    stdout: String::new(),
                }
            }
        },
        None => outcome,
    }
}

fn usage(e: impl std::fmt::Display) -> Outcome {
    eprintln!("error: {e}");
    Outcome {
        code: 2,
        stdout: String::new(),
    }
}

type CmdResult = Result<Outcome, String>;

fn ok(stdout: String) -> CmdResult {
    Ok(Outcome { code: 0, stdout })
}

fn params(k: usize, l1: i64, l2: i64, l3: i64, big_m: i64, big_n: i64) -> Result<Params, String> {
    Params::new(k, l1, l2, l3, big_m, big_n).map_err(|e| e.to_string())
}

fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Enum(a) => cmd_enum(a, cli.format),
        Command::Char(a) => {
            let chi = fermionic_char(a.k, a.l1, a.l2, a.big_m, a.big_n).map_err(|e| e.to_string())?;
            ok(poly_out(&chi, cli.format, None))
        }
        Command::CharBruteforce(a) => {
            let p = params(a.k, a.l1, a.l2, a.l3.unwrap_or(a.l1.min(a.l2)), a.big_m, a.big_n)?;
            ok(poly_out(&char_r(&p), cli.format, None))
        }
        Command::Sl2Char(a) => {
            let chi = sl2_char(a.k, a.l, a.big_m, a.big_n).map_err(|e| e.to_string())?;
            ok(poly_out(&chi, cli.format, Some(SL2_NAMES)))
        }
        Command::Verify(v) => cmd_verify(v, cli.format),
    }
}

fn cmd_enum(a: &EnumArgs, format: Format) -> CmdResult {
    let p = params(a.k, a.l1, a.l2, a.l3, a.big_m, a.big_n)?;
    let pieces: Vec<PieceDoc> = match (a.m, a.n) {
        (Some(m), Some(n)) => vec![PieceDoc::new(&enumerate_r(&p, m, n))],
        _ => {
            let (max_m, max_n) = weight_bounds(&p);
            let weights: Vec<(i64, i64)> = (0..=max_m).flat_map(|m| (0..=max_n).map(move |n| (m, n))).collect();
            weights
                .par_iter()
                .map(|&(m, n)| enumerate_r(&p, m, n))
                .filter(|s| !s.is_empty())
                .map(|s| PieceDoc::new(&s))
                .collect()
        }
    };
    let doc = EnumDoc::new(&p, pieces);
    ok(match format {
        Format::Json => doc.to_json() + "\n",
        Format::Text => enum_text(&doc),
    })
}

fn enum_text(doc: &EnumDoc) -> String {
    let mut out = String::new();
    for piece in &doc.pieces {
        out += &format!("m={} n={} count={}\n", piece.m, piece.n, piece.count);
        for e in &piece.elements {
            out += &format!(
                "  mu={:?} r={:?} nu={:?} s={:?} degree={}\n",
                e.mu, e.r, e.nu, e.s, e.degree
            );
        }
    }
    out
}

#[derive(Serialize)]
struct TermDoc {
    z1: i64,
    z2: i64,
    q: i64,
    coeff: String,
}

fn poly_out(chi: &LaurentPoly, format: Format, names: Option<[&str; 3]>) -> String {
    match format {
        Format::Text => {
            let text = match names {
                Some(names) => chi.to_text_with(names),
                None => chi.to_string(),
            };
            text + "\n"
        }
        Format::Json => {
            let terms: Vec<TermDoc> = chi
                .terms()
                .map(|(e, c)| TermDoc {
                    z1: e[0],
                    z2: e[1],
                    q: e[2],
                    coeff: c.to_string(),
                })
                .collect();
            serde_json::to_string(&terms).expect("terms serialize") + "\n"
        }
    }
}

/// One unit of verification work, in canonical grid order.
#[derive(Debug, Clone, Copy)]
enum Task {
    Recursion(Params, i64, i64, i64),
    Lower(Params, i64, i64),
    Upper {
        k: usize,
        l1: i64,
        a: i64,
        c: i64,
        big_m: i64,
        big_n: i64,
        m: i64,
        n: i64,
    },
    Bijection(Params, i64, i64),
    Grading(Params, i64, i64),
    Fermionic {
        k: usize,
        l1: i64,
        l2: i64,
        big_m: i64,
        big_n: i64,
    },
    CharRecursion(Params),
}

fn label_grid(g: &Grid, min_n: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for k in 1..=g.max_k {
        for (l1, l2, l3) in Params::legal_labels(k) {
            for big_m in 0..=g.max_big_m {
                for big_n in min_n..=g.max_big_n {
                    out.extend(Params::new(k, l1, l2, l3, big_m, big_n));
                }
            }
        }
    }
    out
}

fn weighted(ps: Vec<Params>, w: i64, f: impl Fn(Params, i64, i64) -> Task) -> Vec<Task> {
    ps.into_iter()
        .flat_map(|p| (0..=w).flat_map(move |m| (0..=w).map(move |n| (p, m, n))))
        .map(|(p, m, n)| f(p, m, n))
        .collect()
}

fn tasks(v: &VerifyCommand) -> Vec<Task> {
    match *v {
        VerifyCommand::Recursion { grid, inject_tau_fault } => {
            weighted(label_grid(&grid.grid, 1), grid.max_weight, |p, m, n| {
                Task::Recursion(p, m, n, inject_tau_fault)
            })
        }
        VerifyCommand::LowerDecomp(g) => weighted(label_grid(&g.grid, 0), g.max_weight, Task::Lower),
        VerifyCommand::Bijection(g) => weighted(label_grid(&g.grid, 1), g.max_weight, Task::Bijection),
        VerifyCommand::Grading(g) => weighted(label_grid(&g.grid, 1), g.max_weight, Task::Grading),
        VerifyCommand::UpperDecomp(g) => {
            let mut out = Vec::new();
            for k in 1..=g.grid.max_k {
                let ki = k as i64;
                for l1 in 0..=ki {
                    for a in 0..=l1 {
                        for c in 0..=ki - a {
                            for big_m in 0..=g.grid.max_big_m {
                                for big_n in 0..=g.grid.max_big_n {
                                    for m in 0..=g.max_weight {
                                        for n in 0..=g.max_weight {
                                            out.push(Task::Upper {
                                                k,
                                                l1,
                                                a,
                                                c,
                                                big_m,
                                                big_n,
                                                m,
                                                n,
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            out
        }
        VerifyCommand::Fermionic(g) => {
            let mut out = Vec::new();
            for k in 1..=g.max_k {
                let ki = k as i64;
                for l1 in 0..=ki {
                    for l2 in 0..=ki {
                        for big_m in 0..=g.max_big_m {
                            for big_n in 0..=g.max_big_n {
                                out.push(Task::Fermionic {
                                    k,
                                    l1,
                                    l2,
                                    big_m,
                                    big_n,
                                });
                            }
                        }
                    }
                }
            }
            out
        }
        VerifyCommand::CharRecursion(g) => label_grid(&g, 1).into_iter().map(Task::CharRecursion).collect(),
    }
}

fn perform(t: Task, cache: &SetCache) -> rigged_core::Result<Report> {
    match t {
        Task::Recursion(p, m, n, 0) => verify_recursion_cached(&p, m, n, cache),
        Task::Recursion(p, m, n, shift) => verify_recursion_faulty(&p, m, n, shift, cache),
        Task::Lower(p, m, n) => verify_lower_decomposition_cached(&p, m, n, cache),
        Task::Upper {
            k,
            l1,
            a,
            c,
            big_m,
            big_n,
            m,
            n,
        } => verify_upper_decomposition_cached(k, l1, a, c, big_m, big_n, m, n, cache),
        Task::Bijection(p, m, n) => verify_bijection_cached(&p, m, n, cache),
        Task::Grading(p, m, n) => verify_grading_cached(&p, m, n, cache),
        Task::Fermionic {
            k,
            l1,
            l2,
            big_m,
            big_n,
        } => fermionic_check(k, l1, l2, big_m, big_n),
        Task::CharRecursion(p) => char_recursion_check(&p),
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    check: &'a str,
    passed: bool,
    points: usize,
    examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a Report>,
}

fn cmd_verify(v: &VerifyCommand, format: Format) -> CmdResult {
    let name = match v {
        VerifyCommand::Recursion { .. } => "recursion",
        VerifyCommand::LowerDecomp(_) => "lower-decomp",
        VerifyCommand::UpperDecomp(_) => "upper-decomp",
        VerifyCommand::Bijection(_) => "bijection",
        VerifyCommand::Grading(_) => "grading",
        VerifyCommand::Fermionic(_) => "fermionic",
        VerifyCommand::CharRecursion(_) => "char-recursion",
    };
    let work = tasks(v);
    let total = work.len();
    let cache = SetCache::new();
    let done = AtomicUsize::new(0);
    let progress = std::io::stderr().is_terminal();
    let reports: Vec<Report> = work
        .par_iter()
        .map(|&t| {
            let r = perform(t, &cache);
            let d = done.fetch_add(1, Ordering::Relaxed) + 1;
            if progress && (d.is_multiple_of(256) || d == total) {
                eprint!("\r{name}: {d}/{total}");
                if d == total {
                    eprintln!();
                }
            }
            r
        })
        .collect::<rigged_core::Result<_>>()
        .map_err(|e| e.to_string())?;
    let first_failure = reports.iter().position(|r| !r.passed);
    let upto = first_failure.map_or(reports.len(), |i| i + 1);
    let summary = Summary {
        check: name,
        passed: first_failure.is_none(),
        points: upto,
        examined: reports[..upto].iter().map(|r| r.examined).sum(),
        counterexample: first_failure.map(|i| &reports[i]),
    };
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
        Format::Text => {
            let mut s = format!(
                "{}: {} ({} points, {} elements)\n",
                name,
                if summary.passed { "pass" } else { "FAIL" },
                summary.points,
                summary.examined
            );
            if let Some(r) = summary.counterexample {
                s += &serde_json::to_string_pretty(r).expect("report serializes");
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome {
        code: if summary.passed { 0 } else { 1 },
        stdout,
    })
}
