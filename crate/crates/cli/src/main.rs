use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod input;

#[derive(Parser)]
#[command(name = "hspeed", version, about = "Parameters, universal graphs, extraction and speeds of hereditary graph classes")]
struct Cli {
    /// Print one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph parameters of a graph6 string, `@file` of graph6 lines, or stdin.
    Params { graph: Option<String> },
    /// graph6 of the n-th graph of a family.
    Generate {
        family: String,
        n: usize,
        /// Complement the generated graph.
        #[arg(long)]
        co: bool,
    },
    /// Run an extraction procedure on a graph.
    Extract {
        procedure: String,
        graph: String,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Part A of the bipartition (comma-separated vertices); the rest is part B.
        #[arg(long)]
        a: Option<String>,
    },
    /// Labelled speed of a class at n vertices.
    Count {
        class: String,
        n: usize,
        /// Report only the closed-form value of a family.
        #[arg(long)]
        formula: bool,
        /// Print `n,count` rows for 1..=n.
        #[arg(long)]
        csv: bool,
        /// JSON-lines count cache (defaults to $HSPEED_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Ignore any cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Speed layer of a class.
    Classify { class: String },
    /// Index k and entropy 1 - 1/k of a finitely forbidden class.
    Index { class: String },
    /// Check that every n-vertex member of a family's class embeds in its generator.
    Universality { family: String, n: usize },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(cli.command, cli.json) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
