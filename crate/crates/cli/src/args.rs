use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rck_core::constructions::Construction;
use rck_core::CliqueVector;

/// Exact checks for Ramsey arrowing, K_t-saturation and co-criticality of
/// small graphs. Graphs are read as graph6 lines from --in, stdin, or a named
/// construction.
#[derive(Debug, Parser)]
#[command(name = "rck", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "RCK_WORKERS", value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,

    /// Emit JSON lines (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,

    /// Emit one human-readable line per record.
    #[arg(long, global = true)]
    pub text: bool,

    /// Add wall-clock times to records.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide G → (K_t1, ..., K_tk) for each input graph.
    Arrow {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Write each critical coloring found to `DIR/NNNNNN.txt`, numbered by record.
        #[arg(long, value_name = "DIR")]
        witness_dir: Option<PathBuf>,
    },
    /// Decide co-criticality for each input graph.
    Cocritical {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        checks: CheckArgs,
        /// Also decide whether the graph is minimal co-critical.
        #[arg(long)]
        minimal: bool,
    },
    /// Decide K_t-saturation and check the Hajnal degree dichotomy.
    Saturated {
        /// Clique size.
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Scan a graph stream for co-critical graphs and print one summary.
    Scan {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Ramsey number to use when the built-in table has none.
        #[arg(long)]
        ramsey: Option<usize>,
        /// Cross-check every verdict against full enumeration of colorings.
        #[arg(long)]
        oracle: bool,
    },
    /// Print every graph on the given numbers of vertices up to isomorphism.
    Gen {
        /// Smallest vertex count.
        min: usize,
        /// Largest vertex count (default: MIN).
        max: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// Clique sizes, one per color, e.g. 3,4.
    #[arg(long)]
    pub spec: CliqueVector,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Named graph: kn:N, k6minus, hanson-toft:S,T:N, complete-multipartite:P1,P2,...
    #[arg(long, conflicts_with = "input")]
    pub construct: Option<Construction>,
    /// graph6 file, one graph per line (default: stdin).
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Give up (exit 3) after this many search nodes per decision.
    #[arg(long)]
    pub node_limit: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Run the structural checks on co-critical graphs.
    #[arg(long)]
    pub lemmas: bool,
    /// Ramsey number to use when the built-in table has none.
    #[arg(long)]
    pub ramsey: Option<usize>,
}
