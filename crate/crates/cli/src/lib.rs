//! Command-line front end for `twglue`.
//!
//! All randomness in a run comes from one generator seeded with `--seed`.
//! Data goes to files under `--out-dir`, each carrying the run
//! configuration in its header; human summaries go to standard error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twglue::DEFAULT_SOLVER_LIMIT;

mod commands;
pub mod config;
pub mod inputs;
pub mod suites;

pub use config::RunConfig;

/// Exit status for a failed validation or certification.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for usage errors and unreadable or malformed input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twglue", version, about = "Glue graphs along permutations and certify the treewidth of the result")]
pub struct Cli {
    /// Seed of the run's random generator.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (defaults to the number of CPUs). Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory for all artifacts.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    /// Largest vertex count handed to the exact solvers.
    #[arg(long, global = true, env = "TWGLUE_SOLVER_LIMIT", default_value_t = DEFAULT_SOLVER_LIMIT)]
    pub solver_limit: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a family.
    Gen(GenArgs),
    /// Glue two graphs along a permutation.
    Glue(GlueArgs),
    /// Build a gluing with a certified width bound.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Exact treewidth with an optimal decomposition.
    Tw(WidthArgs),
    /// Exact pathwidth with an optimal layout.
    Pw(WidthArgs),
    /// Check a tree decomposition against a graph.
    Validate(ValidateArgs),
    /// Lower-bound experiments on gluings of balanced trees.
    #[command(subcommand)]
    Lab(LabCommand),
    /// Run an acceptance suite end to end.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyName {
    Star,
    Path,
    Caterpillar,
    RandomCaterpillar,
    RandomTree,
    PartialKtree,
    Banded,
    Balanced,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: usize,
    /// Width of a partial k-tree.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Edge retention probability (partial k-tree, banded).
    #[arg(long, default_value_t = 0.8)]
    pub keep: f64,
    /// Bandwidth of a banded graph.
    #[arg(long, default_value_t = 1)]
    pub band: usize,
    /// Branching of a balanced tree.
    #[arg(long, default_value_t = 2)]
    pub b: usize,
    /// Leaves per spine vertex of an explicit caterpillar, e.g. `2,0,3`.
    #[arg(long, value_delimiter = ',')]
    pub leaves: Vec<usize>,
    /// Shuffle labels uniformly.
    #[arg(long)]
    pub shuffle: bool,
    /// Output file name inside the output directory.
    #[arg(long, default_value = "graph.gr")]
    pub out: String,
}

#[derive(Debug, Args)]
pub struct GlueArgs {
    #[arg(long)]
    pub g1: PathBuf,
    #[arg(long)]
    pub g2: PathBuf,
    /// Permutation file; a uniform permutation is drawn when absent.
    #[arg(long)]
    pub phi: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// Add a vertex cover of G1 to every bag of a decomposition of G2.
    Cover {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        /// Decomposition of G2; computed when absent.
        #[arg(long)]
        td2: Option<PathBuf>,
        /// Permutation file; a uniform permutation is drawn when absent.
        #[arg(long)]
        phi: Option<PathBuf>,
    },
    /// Align optimal layouts of both graphs.
    Layouts {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
    },
    /// Bounded treewidth G1 with bounded pathwidth G2.
    TwPw {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        /// Decomposition of G1; computed when absent.
        #[arg(long)]
        td1: Option<PathBuf>,
    },
    /// A path with a tree, glued into an outerplanar graph.
    PathTree {
        /// The path.
        #[arg(long)]
        g1: PathBuf,
        /// The tree.
        #[arg(long)]
        g2: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct WidthArgs {
    #[arg(long)]
    pub gr: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub gr: PathBuf,
    #[arg(long)]
    pub td: PathBuf,
    /// Also fail when the width exceeds this value.
    #[arg(long)]
    pub max_width: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum LabCommand {
    /// Balanced b-ary tree with its subtree-size profile.
    BalancedTree {
        #[arg(long, default_value_t = 2)]
        b: usize,
        #[arg(long)]
        n: usize,
    },
    /// Check the crossing-edge formula on every subset of random rooted trees.
    CutFormula {
        #[arg(long, default_value_t = 20)]
        trees: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Minimum crossing edges (and similarity classes) over balanced cuts.
    Scan {
        #[arg(long)]
        gr: PathBuf,
        /// Sample this many random balanced cuts instead of scanning all.
        #[arg(long)]
        samples: Option<usize>,
        /// Also minimize the number of similarity classes.
        #[arg(long)]
        mu: bool,
    },
    /// Similarity classes and crossing edges of one cut.
    Mu {
        #[arg(long)]
        gr: PathBuf,
        /// Members of the cut, e.g. `1,4,5`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        cut: Vec<usize>,
    },
    /// Exact distance between the dyadic and triadic point sets.
    Badic {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
    /// Find a long red-free window after a few red elements.
    Biggap {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        /// Red elements, e.g. `5,17`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        reds: Vec<u64>,
    },
    /// Local search for low-treewidth gluings of balanced trees.
    Probe {
        /// Sizes to probe, e.g. `10,15,20`.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = suites::PROBE_TRIES)]
        tries: usize,
        /// Width evaluations per try.
        #[arg(long, default_value_t = suites::PROBE_BUDGET)]
        budget: usize,
    },
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// One of: constructions, cut-formula, balanced-trees, badic, sandwich, gap, oracles, probe, all.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(suites::SUITE_NAMES))]
    pub suite: String,
    /// Probe sizes.
    #[arg(long, value_delimiter = ',', default_values_t = suites::PROBE_NS)]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = suites::PROBE_TRIES)]
    pub tries: usize,
    #[arg(long, default_value_t = suites::PROBE_BUDGET)]
    pub budget: usize,
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    commands::execute(cli)
}
