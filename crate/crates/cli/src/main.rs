//! `baxter` — batch driver for the exact-arithmetic toolkit.
//!
//! - every subcommand emits a single schema-versioned report (JSON by
//!   default, `--format table` for a plain rendering) on stdout or to
//!   `--out`;
//! - identical invocations produce byte-identical payloads — only the
//!   `timing_ms` field varies between runs;
//! - exit codes: 0 success, 1 when a well-posed mathematical check comes
//!   back false (a family failing strictness, a certificate that does not
//!   close), 2 for usage, parse, and resource errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Parser)]
#[command(name = "baxter", version, about = "Exact-arithmetic toolkit for polynomial families, interlacing, and log-convexity certificates", long_about = None)]
struct Cli {
    /// Report rendering
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Baxter descent polynomials PB_n(t)
    Baxter,
    /// Hoggatt polynomials H_n^[m](1,t) (requires --m)
    Hoggatt,
    /// (q,t)-Hoggatt sums H_n^[m](q,t) (requires --m and --q)
    HoggattQt,
    /// Binomial-product polynomials F_{n,m}(t) (requires --m)
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Generalized,
}

/// Inclusive index range written as `LO..HI`.
fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Subcommand)]
enum Command {
    /// Print a family's coefficient table over an index range
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive range LO..HI of the index n
        #[arg(long, value_parser = parse_range)]
        range: (i64, i64),
        /// Box height m (hoggatt, hoggatt-qt, f)
        #[arg(long)]
        m: Option<i64>,
        /// Integer q of the (q,t)-sum (hoggatt-qt)
        #[arg(long)]
        q: Option<i64>,
    },

    /// Check the (generalized) Sturm-sequence property over a family
    Interlace {
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive range LO..HI of the index n
        #[arg(long, value_parser = parse_range)]
        range: (i64, i64),
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
    },

    /// Extend a P-recursive sequence exactly up to an index
    Seq {
        /// Builtin recurrence (baxter | catalan)
        #[arg(long, conflicts_with = "spec_file")]
        seq: Option<String>,
        /// JSON sequence-spec file (order, coeff_polys, start_index, initial)
        #[arg(long)]
        spec_file: Option<PathBuf>,
        /// Last index to compute
        #[arg(long)]
        upto: i64,
    },

    /// Ratio and sequence expansions, the R^2 expansion, and its order
    Asymp {
        #[arg(long, conflicts_with = "spec_file")]
        seq: Option<String>,
        #[arg(long)]
        spec_file: Option<PathBuf>,
        /// Expansion depth (number of ratio correction terms)
        #[arg(long, default_value_t = 4)]
        eta: u32,
        /// Also estimate the leading constant C numerically
        #[arg(long)]
        estimate: bool,
        /// Probe index for the estimate
        #[arg(long, default_value_t = 2000)]
        n_probe: i64,
        /// Decimal places for the estimate (default: BAXTER_DIAG_DIGITS or 12)
        #[arg(long)]
        digits: Option<usize>,
    },

    /// Certify asymptotic r-log-convexity and close the initial gap
    Certify {
        #[arg(long, conflicts_with = "spec_file")]
        seq: Option<String>,
        #[arg(long)]
        spec_file: Option<PathBuf>,
        /// Convexity level r (r = 1 is log-convexity)
        #[arg(long)]
        r: u32,
        /// Expansion depth; defaults to 2r
        #[arg(long)]
        eta: Option<u32>,
        /// Give up if no induction base exists at or below this index
        #[arg(long, default_value_t = 4_000_000)]
        n0_cap: i64,
        /// Skip the exact initial check beyond this many terms
        #[arg(long, default_value_t = 50_000)]
        initial_cap: i64,
        /// Extend the exact initial check at least this far
        #[arg(long, default_value_t = 0)]
        initial_floor: i64,
    },

    /// Leading principal minors of the sequence's Hankel matrix
    Hankel {
        #[arg(long, conflicts_with = "spec_file")]
        seq: Option<String>,
        #[arg(long)]
        spec_file: Option<PathBuf>,
        /// Compute the first k minors
        #[arg(long, default_value_t = 5)]
        upto_order: usize,
        /// Window offsets from the recurrence's start index (repeatable)
        #[arg(long = "offset", default_values_t = [0i64, 1])]
        offsets: Vec<i64>,
    },

    /// Brute-force Baxter descent enumeration against the closed formula
    Enumerate {
        #[arg(long)]
        n: i64,
        /// Refuse enumerations beyond this n
        #[arg(long, default_value_t = 10)]
        cap: i64,
    },

    /// Canned evidence scans (1: Sturm over (q,t)-sums; 2: exact initial
    /// r-log-convexity of Baxter; 3: log-convexity of H^[m](1,1) terms)
    Conjecture {
        #[arg(long)]
        id: u32,
        /// id 1: inclusive q range (default 1..10)
        #[arg(long, value_parser = parse_range)]
        q: Option<(i64, i64)>,
        /// id 1: inclusive n range (default 1..12)
        #[arg(long, value_parser = parse_range)]
        n: Option<(i64, i64)>,
        /// id 1: comma-separated m list (default 2,3); id 3: single m (default 4)
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<i64>>,
        /// id 2: level (default 3); id 3: level (default 1)
        #[arg(long)]
        r: Option<u32>,
        /// id 2: last index of the exact scan (default 1000)
        #[arg(long)]
        upto: Option<i64>,
        /// id 3: number of terms to compute (default 5000)
        #[arg(long)]
        cap: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            let doc = report::ReportDocument::new(
                outcome.resolved,
                outcome.payload,
                started.elapsed().as_millis() as u64,
            );
            if let Err(e) = report::emit(&doc, &outcome.table, cli.format, cli.out.as_deref()) {
                eprintln!("baxter: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("baxter: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

// ---------------------------------------------------------------------------
