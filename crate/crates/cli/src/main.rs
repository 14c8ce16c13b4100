mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use delkit::verify::Suite;
use delkit::{BitString, Budget, DEFAULT_MAX_N};

use commands::Method;
use output::Format;

/// Exact combinatorics of the binary deletion channel.
#[derive(Parser)]
#[command(name = "delkit", version, about)]
struct Cli {
    /// Largest n for exhaustive enumeration
    #[arg(long, global = true, env = "DELKIT_BUDGET")]
    budget: Option<usize>,

    /// Output format; `count` defaults to text, everything else to csv
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of embeddings of x in y
    Count {
        #[arg(long)]
        y: BitString,
        #[arg(long)]
        x: BitString,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        /// Also list every embedding (1-based)
        #[arg(long)]
        masks: bool,
    },
    /// Weight histogram of all length-n supersequences of x
    Distribution {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        by_cluster: bool,
    },
    /// Shannon, Rényi and min-entropy of one (x, n)
    Entropy {
        #[arg(long)]
        x: BitString,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2.0])]
        alpha: Vec<f64>,
    },
    /// Entropies for every x of length m
    Sweep {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2.0])]
        alpha: Vec<f64>,
        /// Allow m > 12
        #[arg(long)]
        force: bool,
    },
    /// Entropy along x, g(x), g(g(x)), … down to a constant string
    Gchain {
        #[arg(long)]
        x: BitString,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        deletions: u8,
    },
    /// Run a verification suite; exits 1 on any failing case
    Verify {
        /// clusters, initials, singletons, lemma1, lemma4, identityB, identityC, entropy-min
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
}

fn run(cli: Cli) -> Result<bool> {
    let budget = Budget::new(cli.budget.unwrap_or(DEFAULT_MAX_N))?;
    let default_format = match cli.command {
        Command::Count { .. } => Format::Text,
        _ => Format::Csv,
    };
    let format = cli.format.unwrap_or(default_format);
    let mut passed = true;
    let out = match &cli.command {
        Command::Count { y, x, method, masks } => commands::count(y, x, *method, *masks, &budget)?,
        Command::Distribution { x, n, by_cluster } => commands::distribution(x, *n, *by_cluster, &budget)?,
        Command::Entropy { x, n, alpha } => commands::entropy_rows(x, *n, alpha, &budget)?,
        Command::Sweep { m, n, alpha, force } => commands::sweep_cmd(*m, *n, alpha, *force, &budget)?,
        Command::Gchain { x, deletions } => commands::gchain(x, *deletions as usize, &budget)?,
        Command::Verify { suite, max_m } => {
            let (out, report) = commands::verify(*suite, *max_m, &budget)?;
            let failed = report.failures().count();
            eprintln!("{}: {} cases, {} failed", report.suite, report.cases.len(), failed);
            passed = failed == 0;
            out
        }
    };
    out.write(format, cli.out.as_deref())?;
    Ok(passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
