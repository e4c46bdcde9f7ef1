use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use kconn_core::Ratio;

#[derive(Parser, Debug)]
#[command(
    name = "kconn",
    version,
    about = "k-connected graph families, connectivity, and small Ramsey computations"
)]
pub struct Cli {
    /// Worker threads for parallel searches (defaults to the machine's parallelism).
    #[arg(long, global = true, env = "KCONN_THREADS")]
    pub threads: Option<usize>,

    /// Print a JSON report on stdout instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family member for (n, k, f) or explicit (n, t, k).
    Construct(ConstructArgs),
    /// Exact vertex connectivity with a cut certificate.
    Kappa(KappaArgs),
    /// Decide K_N -> (G, H) exhaustively.
    Arrows(ArrowsArgs),
    /// Smallest N <= cap with K_N -> (G, G).
    Ramsey(RamseyArgs),
    /// Run an embedding strategy on a colouring.
    Strategy(StrategyArgs),
    /// Colour a digraph with at most 2Δ+1 colours.
    ColorDigraph(ColorDigraphArgs),
    /// Generate a seeded two-colouring in RB format.
    GenColoring(GenColoringArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Auto,
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProxyArg {
    Exp,
    Exact,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("size").required(true).args(["f", "t"])))]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Target growth value f(n); t is chosen so the core's Ramsey number exceeds it.
    #[arg(long)]
    pub f: Option<u64>,
    /// Use this t directly instead of selecting it from f (needs --case 1 or 2).
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    pub case: CaseArg,
    #[arg(long, value_enum, default_value = "exp")]
    pub proxy: ProxyArg,
    /// Largest f for which the exact proxy may run.
    #[arg(long, default_value_t = 8)]
    pub cap: usize,
    /// Also write the graph6 line here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KappaArgs {
    /// graph6 file or literal.
    #[arg(long = "in")]
    pub input: String,
    /// Exit 1 unless the connectivity is exactly this value.
    #[arg(long)]
    pub assert_k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ArrowsArgs {
    #[arg(long)]
    pub n: usize,
    /// Red pattern, graph6 file or literal.
    #[arg(long)]
    pub pattern: String,
    /// Blue pattern; defaults to the red one.
    #[arg(long)]
    pub pattern2: Option<String>,
    /// Largest N searched exhaustively.
    #[arg(long, default_value_t = 8)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct RamseyArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long, default_value_t = 8)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct StrategyArgs {
    #[arg(long = "case", value_parser = ["1", "2"])]
    pub case: String,
    /// RB colouring file or literal.
    #[arg(long, visible_alias = "coloring")]
    pub colouring: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub k: usize,
    /// Fraction-descent threshold (default 1/40 for case 1, 1/8 for case 2).
    #[arg(long)]
    pub epsilon: Option<Ratio>,
    /// Write the stage records as JSON here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "random"])))]
pub struct ColorDigraphArgs {
    /// Digraph file (`DG <n>` header, then `u v` arc lines).
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Colour a random digraph on this many vertices instead.
    #[arg(long)]
    pub random: Option<usize>,
    /// In-degree bound for --random.
    #[arg(long, default_value_t = 3)]
    pub max_in: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Uniform,
    AllRed,
    AllBlue,
    Pentagon,
}

#[derive(Args, Debug)]
pub struct GenColoringArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "uniform")]
    pub dist: DistArg,
    /// Red probability for the uniform distribution.
    #[arg(long, default_value = "1/2")]
    pub p: Ratio,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
