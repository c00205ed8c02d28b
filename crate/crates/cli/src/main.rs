//! `matchlab`: generators, counters, invariants, shifting, oracles and
//! reports for k-uniform hypergraphs.
//!
//! Exit codes: 0 success, 1 invalid input, 2 node budget exhausted,
//! 3 invariant violation.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "matchlab", version, about = "Exact tools for matchings in k-uniform hypergraphs")]
pub struct Cli {
    /// Print stable `key=value` lines instead of tables.
    #[arg(long, global = true)]
    pub porcelain: bool,
    /// Node budget for every exact search.
    #[arg(long, global = true, default_value_t = matchlab::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone)]
pub struct FamilyArgs {
    /// One of A<i>, B, E0, E1, complete, star.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    /// Matching bound; not needed for complete and star.
    #[arg(long)]
    pub s: Option<u64>,
}

#[derive(Args, Clone)]
pub struct Params {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Subcommand)]
pub enum Command {
    /// Write a named family as .khg.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output file (default: standard output).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact size of a named family.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Table of the catalogued bounds.
    Bounds {
        #[command(flatten)]
        params: Params,
        /// Rational in (0, 1), as `a/b` or a decimal.
        #[arg(long, default_value = "1/100")]
        epsilon: String,
    },
    /// Matching number of a .khg file (`-` for standard input).
    Nu { input: PathBuf },
    /// Vertex cover number.
    Tau { input: PathBuf },
    /// Clique number.
    Omega { input: PathBuf },
    /// Extend to an s-saturated family.
    Saturate {
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply the shift S(x, y).
    Shift {
        input: PathBuf,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shift until the family is shifted on [m].
    Closure {
        input: PathBuf,
        /// Prefix size (default: n).
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the step trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Degree-normalized shifting that keeps the family non-trivial.
    Shiftproc {
        input: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Cross-intersecting families: check files, or the bound and optimum.
    Crossint {
        /// Families to check for pairwise cross-intersection.
        inputs: Vec<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Also compute the exact optimum by exhaustive search.
        #[arg(long)]
        oracle: bool,
        /// Directory for the optimum's families (one .khg per family).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Largest family with matching number at most s.
    Search {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        nontrivial: bool,
        #[arg(long)]
        shifted: bool,
        /// Write PREFIX.khg and PREFIX.cert.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search optima against the bound table.
    Verify {
        #[command(flatten)]
        params: Params,
        /// Comma-separated modes: plain, nontrivial, shifted, shifted-nontrivial.
        #[arg(long, default_value = "plain,nontrivial")]
        modes: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
