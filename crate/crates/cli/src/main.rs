use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod manifest;
mod seeds;

use commands::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "plutus",
    version,
    about = "Build and check m-connected k-dominating backbones"
)]
struct Cli {
    /// Base seed; `generate` uses seed, seed+1, ...
    #[arg(long, global = true, env = "PLUTUS_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PipelineArgs {
    #[arg(short, default_value_t = 1)]
    k: usize,
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    m: u8,
    /// Fail instead of falling back when k-dominance cannot be met.
    #[arg(long)]
    strict: bool,
    /// Cap on augmentation iterations per phase (default 10n).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_iters: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write seeded random unit disk graph instances.
    Generate {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(short, long)]
        radius: f64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Output directory; instances go to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the pipeline on a graph file.
    Solve {
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a Graphviz drawing next to the result.
        #[arg(long, requires = "out")]
        dot: bool,
    },
    /// Check a result against its graph; exits 6 when a check fails.
    Verify {
        graph: PathBuf,
        result: PathBuf,
        /// Defaults to the k recorded in the result.
        #[arg(short)]
        k: Option<usize>,
        /// Defaults to the m recorded in the result.
        #[arg(short, value_parser = clap::value_parser!(u8).range(1..=3))]
        m: Option<u8>,
        /// Warn when the backbone stretch exceeds this; never fails the check.
        #[arg(long, default_value_t = 5.0)]
        stretch_bound: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive minimum for graphs of at most 20 nodes.
    Oracle {
        graph: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        m: u8,
        /// Give up above this backbone size.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve and verify a batch of random instances.
    Bench {
        /// Comma-separated node counts.
        #[arg(short, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(short, long)]
        radius: f64,
        /// Seed list such as `1..20` or `1,4,9`; defaults to `--seed`.
        #[arg(long)]
        seeds: Option<String>,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Compare against the exhaustive optimum where n <= 20.
        #[arg(long)]
        oracle: bool,
        /// Write the JSON summary here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let seed = cli.seed;
    match cli.command {
        Command::Generate {
            n,
            radius,
            count,
            out,
        } => commands::generate(n as usize, radius, seed, count, out.as_deref()),
        Command::Solve {
            input,
            pipeline,
            out,
            dot,
        } => commands::solve(&input, &pipeline.config(), seed, out.as_deref(), dot),
        Command::Verify {
            graph,
            result,
            k,
            m,
            stretch_bound,
            out,
        } => commands::verify(&graph, &result, k, m, stretch_bound, seed, out.as_deref()),
        Command::Oracle {
            graph,
            k,
            m,
            max_size,
            out,
        } => commands::oracle(&graph, k, m, max_size, seed, out.as_deref()),
        Command::Bench {
            n,
            radius,
            seeds,
            pipeline,
            oracle,
            out,
        } => {
            let seeds = match seeds {
                Some(text) => seeds::parse_seed_list(&text).map_err(Failure::usage_msg)?,
                None => vec![seed],
            };
            commands::bench(
                n,
                radius,
                seeds,
                &pipeline.config(),
                oracle,
                seed,
                out.as_deref(),
            )
        }
    }
}

impl PipelineArgs {
    fn config(&self) -> plutus_core::PlutusConfig {
        let mut cfg = plutus_core::PlutusConfig::new(self.k, self.m);
        cfg.max_augmentation_iterations = self.max_iters.map(|c| c as usize);
        if self.strict {
            cfg.synergy_mode = plutus_core::SynergyMode::Strict;
        }
        cfg
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
