//! `rectlr`: expansions, witnesses and independence checks for products of
//! complementary Schur functions over a rectangle.
//!
//! Exit codes: 0 when the requested check succeeds, 1 when it completes with
//! a negative outcome (stuck elimination, deficient rank, failed
//! certificate), 2 for bad input or an environment error.

mod commands;

use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rectlr::verify::{check_modulus, DEFAULT_PRIMES};
use rectlr::{ExpansionCache, Partition, Rectangle, Word};

use crate::commands::Report;

#[derive(Parser, Debug)]
#[command(name = "rectlr", version, about)]
struct Cli {
    /// Directory for persistent expansion cache files.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    jobs: Option<NonZeroUsize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand s_λ s_μ in the Schur basis.
    Expand { lambda: Partition, mu: Partition },
    /// List the complementary pairs of a rectangle.
    Pairs { rect: Rectangle },
    /// Build and certify the witness for the pair given by a word.
    Witness {
        rect: Rectangle,
        #[arg(long, allow_hyphen_values = true)]
        word: Word,
    },
    /// Certify a witness for every (almost) self-complementary pair.
    VerifyTheorem { rect: Rectangle },
    /// Run the elimination fixpoint and emit its trace.
    Eliminate {
        rect: Rectangle,
        /// Only accept witnesses whose coefficient is one.
        #[arg(long)]
        require_unit_coeff: bool,
    },
    /// Certify that the complementary products are linearly independent.
    Rank {
        rect: Rectangle,
        /// Prime modulus above 2^20; may be repeated.
        #[arg(long = "prime", value_parser = parse_prime)]
        primes: Vec<u64>,
    },
    /// Check the two dependences among related products.
    Counterexamples,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    check_modulus(p).map_err(|e| e.to_string())?;
    Ok(p)
}

fn run(cli: Cli) -> Result<bool> {
    let jobs = match cli.jobs {
        Some(j) => j.get(),
        None => std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .context("starting the worker pool")?;

    let cache = match &cli.cache_dir {
        Some(dir) => {
            let cache = ExpansionCache::open(dir).with_context(|| format!("opening cache {}", dir.display()))?;
            for path in cache.rejected_files() {
                eprintln!("warning: ignoring damaged cache file {}", path.display());
            }
            cache
        }
        None => ExpansionCache::in_memory(),
    };

    let report: Report = match cli.command {
        Command::Expand { lambda, mu } => commands::expand(&lambda, &mu, &cache),
        Command::Pairs { rect } => commands::pairs(&rect),
        Command::Witness { rect, word } => commands::witness(&rect, &word)?,
        Command::VerifyTheorem { rect } => commands::verify_theorem(&rect)?,
        Command::Eliminate {
            rect,
            require_unit_coeff,
        } => commands::eliminate(&rect, require_unit_coeff, &cache),
        Command::Rank { rect, primes } => {
            let primes = if primes.is_empty() {
                DEFAULT_PRIMES.to_vec()
            } else {
                primes
            };
            commands::rank(&rect, &primes, &cache)?
        }
        Command::Counterexamples => commands::counterexamples(),
    };
    cache.flush().context("writing the cache")?;

    let mut rendered = match cli.format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json)?,
    };
    if !rendered.ends_with('\n') {
        rendered.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    for line in &report.alerts {
        eprintln!("{line}");
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
