//! `qgc`: command-line front end for the graph, code and Boolean function
//! libraries. Every subcommand is a thin wrapper around one library call.

mod checkpoint;
mod commands;
mod input;
pub mod tables;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

pub use checkpoint::{classify_resumable, search_circulant_resumable};
pub use input::{parse_edges, GraphInput};

#[derive(Parser, Debug)]
#[command(name = "qgc", version, about = "Self-dual GF(4) codes, graph states and Boolean functions")]
pub struct Cli {
    /// JSON lines instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "QGC_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum distance and type of a graph code.
    Distance(GraphInput),
    /// Weight distribution of a graph code.
    Wdist {
        #[command(flatten)]
        input: GraphInput,
        /// Largest weight to count (default: n).
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// LC orbit of a graph.
    Orbit {
        #[command(flatten)]
        input: GraphInput,
        /// Print every member.
        #[arg(long)]
        list: bool,
        /// Give up after this many graphs.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Canonical graph6 form, up to isomorphism or (with --lc) LC equivalence.
    Canonise {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        lc: bool,
    },
    /// Classify all LC orbits of connected graphs on n vertices.
    Classify(ClassifyArgs),
    /// Best symmetric circulant graph codes on n vertices.
    SearchCirculant {
        #[arg(short = 'n', long = "n")]
        n: usize,
        /// Report every row reaching this distance instead of the best ones.
        #[arg(long)]
        target: Option<u32>,
        /// Census-style output file; progress is checkpointed next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a code from one of the algebraic constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// APC distance and PAR_IHN of a Boolean function.
    Apc(FunctionInput),
    /// PAR over {I,H,N}, {I,H} and {H,N}, CMF and the flat spectrum count.
    Par(FunctionInput),
    /// Every transform of a function as CSV rows (word, coordinate, re, im).
    Spectrum {
        #[command(flatten)]
        function: FunctionInput,
        #[arg(long, value_enum, default_value_t = SetName::Ihn)]
        set: SetName,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lambda_n (with -n) or lambda(G) and the interlace polynomial of a graph.
    Lambda {
        #[arg(short = 'n', long = "n")]
        n: Option<usize>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Reproduce one of the tables.
    Tables {
        #[arg(long, value_enum)]
        id: tables::TableId,
        /// Largest n to include, where the table has a size parameter.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = SeedStrategy::Ext)]
    pub seed_strategy: SeedStrategy,
    /// Orbit walking strategy; by default chosen from --max-mem.
    #[arg(long, value_enum)]
    pub strategy: Option<WalkStrategy>,
    /// Partial weight distribution cutoff used for bucketing.
    #[arg(long)]
    pub pwd_cutoff: Option<usize>,
    /// Memory budget in MB. Below 1024 the low-memory strategy is used.
    #[arg(long)]
    pub max_mem: Option<usize>,
    /// Census output file; progress is checkpointed next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the distance summary table instead of the records.
    #[arg(long)]
    pub summary: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedStrategy {
    All,
    Ext,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkStrategy {
    Canonise,
    Fast,
    Lowmem,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetName {
    Ihn,
    Ih,
    Hn,
    Ix,
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Paley graph code of order m (prime or prime square, 1 mod 4).
    Qr {
        #[arg(short = 'm')]
        m: u32,
    },
    /// Bordered QR code of length m + 1.
    Bqr {
        #[arg(short = 'm')]
        m: u32,
    },
    /// The Paley graph itself.
    Paley {
        #[arg(short = 'm')]
        m: u32,
    },
    /// The length-17 power residue code and its length-18 extension.
    Code18,
    /// A nested regular graph.
    Nested {
        /// Nested clique sizes, outermost first, e.g. 3,4.
        #[arg(long, value_delimiter = ',', conflicts_with = "spec")]
        cliques: Option<Vec<usize>>,
        /// Spec text (`layer n k` and `match level a b : perm` lines, `;` also separates lines).
        #[arg(long)]
        spec: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FunctionInput {
    /// Function in abbreviated ANF, e.g. "012,03,04".
    #[arg(long)]
    pub anf: Option<String>,
    /// Truth table in hex, most significant digit first (needs -n).
    #[arg(long)]
    pub hex: Option<String>,
    /// Number of variables (default: one more than the largest index).
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    /// Use the quadratic function of a graph.
    #[arg(long)]
    pub graph6: Option<String>,
}

/// Exit status 1 (domain error) or 2 (bad input).
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(s) | Failure::Domain(s) => write!(f, "{s}"),
        }
    }
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

pub(crate) fn usage(e: impl fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

pub(crate) fn domain(e: impl fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

pub type Outcome = Result<(), Failure>;

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    if let Some(t) = cli.threads {
        // fails harmlessly if a pool was already set up in this process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match commands::dispatch(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "qgc: {f}");
            f.code()
        }
    }
}

/// Integers without a fractional part, otherwise up to six decimals.
pub fn format_number(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if (x - x.round()).abs() < 1e-9 {
        return format!("{}", x.round() as i64);
    }
    let s = format!("{x:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
