//! The `acp` command line tool.
//!
//! Exit codes: 0 affirmative or success, 1 negative verdict, 2 usage or
//! parse error, 3 precondition violation, 4 enumeration budget exceeded,
//! 5 disagreement between a fast path and its `--verify` oracle.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use report::{Outcome, Report};

#[derive(Debug, Parser)]
#[command(name = "acp", version, about = "Additive complementary pairs of codes over finite field towers")]
pub struct Cli {
    /// Emit the structured report as JSON instead of the summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check the result against a brute-force oracle.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FormArgs {
    /// Exponent j of `π(x) = x^(p^j)`.
    #[arg(long)]
    pub pi: Option<usize>,
    /// Permutation as 1-based images `σ(1),...,σ(n)`, or `antidiag`.
    #[arg(long)]
    pub sigma: Option<String>,
    /// Diagonal of M as element tokens.
    #[arg(long)]
    pub mu: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two additive codes form an ACP.
    CheckAcp { c: PathBuf, d: PathBuf },
    /// Decide whether two linear codes form an LCP.
    CheckLcp { c: PathBuf, d: PathBuf },
    /// The full-row-rank necessary condition.
    RankNecessary {
        c: PathBuf,
        d: PathBuf,
        #[command(flatten)]
        form: FormArgs,
        /// Use parity-check matrices instead of generators.
        #[arg(long)]
        parity: bool,
    },
    /// The rank criterion with generator and parity-check matrices.
    RankIff {
        c: PathBuf,
        d: PathBuf,
        #[command(flatten)]
        form: FormArgs,
        /// Parity-check matrix for the first code (default: left dual basis).
        #[arg(long)]
        h1: Option<PathBuf>,
        /// Parity-check matrix for the second code.
        #[arg(long)]
        h2: Option<PathBuf>,
    },
    /// Left or right dual of an additive code.
    Dual {
        c: PathBuf,
        #[command(flatten)]
        form: FormArgs,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// Parity-check matrix (a left dual basis).
    Parity {
        c: PathBuf,
        #[command(flatten)]
        form: FormArgs,
    },
    /// Lift a linear code over the top field to an additive code.
    Lift { c: PathBuf },
    /// Trace code over the middle field, with parameters and LCD flag.
    TraceCode { c: PathBuf },
    /// Reed-Solomon code and its dual: p= k= m= points= dim=.
    Rs { params: Vec<String> },
    /// Search for a scaling vector turning a pair into an LCP.
    FindScaling {
        c: PathBuf,
        d: PathBuf,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check this vector instead of searching.
        #[arg(long)]
        check: Option<String>,
    },
    /// Expand an LCP to length n + 1.
    Expand {
        g1: PathBuf,
        g2: PathBuf,
        /// The vector P of length n.
        #[arg(long = "p")]
        p: String,
        /// Prescribed λ; otherwise the first admissible power is used.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Combine m LCPs over the middle field: files C1 D1 C2 D2 ...
    Combine {
        #[arg(long)]
        alphas: String,
        files: Vec<PathBuf>,
    },
    /// Expand by a parity-check row.
    ParityExpand {
        g: PathBuf,
        h: PathBuf,
        #[arg(long = "c")]
        c: String,
        #[arg(long = "d")]
        d: String,
    },
    /// Cyclotomic cosets: N= b=.
    Cosets { params: Vec<String> },
    /// Factor X^n - λ: p= [k=] [m=] n= [lambda=] [level=mid|top].
    Factor { params: Vec<String> },
    /// Component decomposition: p= [k=] m= n= [lambda=].
    Decompose { params: Vec<String> },
    /// Count constacyclic ACPs: p= [k=] m= n= [lambda=].
    CountAcp { params: Vec<String> },
    /// Count constacyclic ACPs by enumeration: ... mode=componentwise|raw.
    EnumerateAcp { params: Vec<String> },
    /// Minimum distance of an additive or linear code.
    Mindist { c: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckAcp { .. } => "check-acp",
            Command::CheckLcp { .. } => "check-lcp",
            Command::RankNecessary { .. } => "rank-necessary",
            Command::RankIff { .. } => "rank-iff",
            Command::Dual { .. } => "dual",
            Command::Parity { .. } => "parity",
            Command::Lift { .. } => "lift",
            Command::TraceCode { .. } => "trace-code",
            Command::Rs { .. } => "rs",
            Command::FindScaling { .. } => "find-scaling",
            Command::Expand { .. } => "expand",
            Command::Combine { .. } => "combine",
            Command::ParityExpand { .. } => "parity-expand",
            Command::Cosets { .. } => "cosets",
            Command::Factor { .. } => "factor",
            Command::Decompose { .. } => "decompose",
            Command::CountAcp { .. } => "count-acp",
            Command::EnumerateAcp { .. } => "enumerate-acp",
            Command::Mindist { .. } => "mindist",
        }
    }
}

/// Run a parsed command.
pub fn run(cli: &Cli) -> crate::Result<Outcome> {
    commands::dispatch(cli)
}

/// Parse arguments, run, print, and return the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => report::EXIT_USAGE,
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                emit(&[serde_json::to_string_pretty(&out.report).unwrap()]);
            } else {
                emit(&out.summary);
            }
            out.exit
        }
        Err(e) => {
            if cli.json {
                let doc = report::error_document(cli.command.name(), &e);
                emit(&[serde_json::to_string_pretty(&doc).unwrap()]);
            }
            eprintln!("error: {e}");
            report::exit_for(&e)
        }
    }
}

/// Write lines to stdout, stopping quietly if the reader has gone away.
fn emit(lines: &[String]) {
    let mut w = std::io::stdout().lock();
    for l in lines {
        if writeln!(w, "{l}").is_err() {
            return;
        }
    }
    let _ = w.flush();
}
