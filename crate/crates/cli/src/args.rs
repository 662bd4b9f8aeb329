use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "contour", version, about = "Parallel connected components by minimum mapping")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a synthetic graph as an edge list.
    Gen(GenArgs),
    /// Label the components of a graph and print a summary.
    Run(RunArgs),
    /// Run an algorithm and compare against the union-find oracle.
    Verify(RunArgs),
    /// Execute a plan file and write CSV records.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphType {
    Path,
    Cycle,
    Grid2d,
    Star,
    #[value(alias = "er")]
    ErdosRenyi,
    Forest,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long = "type", value_enum)]
    pub kind: GraphType,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub rows: usize,
    #[arg(long, default_value_t = 0)]
    pub cols: usize,
    /// Edge probability for erdos-renyi.
    #[arg(long, default_value_t = 0.0)]
    pub p: f64,
    /// Number of trees for forest.
    #[arg(long, default_value_t = 1)]
    pub trees: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Mtx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    C1,
    C2,
    Cm,
    C11mm,
    C1m1m,
    Csyn,
    Fastsv,
    Unionfind,
    Bfs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sync,
    Async,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: InputFormat,
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Operator order for cm, c11mm and c1m1m.
    #[arg(long = "order-m", default_value_t = contour_core::contour::DEFAULT_ORDER_M,
          value_parser = clap::value_parser!(u32).range(2..))]
    pub order_m: u32,
    /// Order-1 sweeps before c11mm switches to order m.
    #[arg(long, default_value_t = contour_core::contour::DEFAULT_WARMUP)]
    pub warmup: usize,
    /// Defaults to the variant's own mode (csyn and fastsv are sync only).
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Defaults to the variant's own setting.
    #[arg(long, value_enum)]
    pub atomics: Option<Toggle>,
    #[arg(long, env = "CONTOUR_THREADS", default_value_t = default_threads(),
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub threads: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Destination for emitted labels (stdout when omitted).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Emit `orig_id label` lines in original ID space.
    #[arg(long)]
    pub emit_labels: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Lines of `graph_path,format,algo,variant,mode,atomics,threads`.
    #[arg(long)]
    pub plan: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 3, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub repeats: usize,
}
