//! `relaxsolve`: run, sweep and compare relaxation-system simulations
//! described by TOML configuration files.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use relaxsolve_core::harness::SweepAxis;

#[derive(Parser, Debug)]
#[command(name = "relaxsolve", version, about = "Finite-volume solvers for hyperbolic systems with stiff relaxation")]
struct Cli {
    /// Worker threads for sweeps and reference runs (defaults to one per core).
    #[arg(long, global = true, env = "RELAXSOLVE_THREADS")]
    threads: Option<usize>,

    /// Directory receiving every output file; created if missing.
    #[arg(long, short, global = true, default_value = ".")]
    output: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one case and write its final profile as CSV.
    Run {
        #[arg(long, short)]
        config: PathBuf,
    },
    /// Repeat a case over relaxation parameters or cell sizes and write the
    /// error table plus a gnuplot script.
    Sweep {
        #[arg(long, short)]
        config: PathBuf,
        /// `eps` or `dx`.
        #[arg(long)]
        axis: SweepAxis,
        /// Comma-separated parameter values.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        values: Vec<f64>,
    },
    /// Run two configurations of the same problem and tabulate their
    /// distances to a common reference.
    Compare {
        #[arg(long, short)]
        config: PathBuf,
        #[arg(long)]
        other: PathBuf,
        /// Fine-mesh reference cell count, overriding the first config's
        /// `[reference]` section.
        #[arg(long)]
        reference_cells: Option<usize>,
    },
}

fn configure_threads(threads: Option<usize>) -> anyhow::Result<()> {
    if let Some(n) = threads {
        anyhow::ensure!(n > 0, "--threads must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads(cli.threads).and_then(|()| match &cli.command {
        Command::Run { config } => commands::run(config, &cli.output),
        Command::Sweep { config, axis, values } => commands::sweep(config, *axis, values, &cli.output),
        Command::Compare { config, other, reference_cells } => {
            commands::compare(config, other, *reference_cells, &cli.output)
        }
    });
    match result {
        Ok(written) => {
            for path in written {
                println!("{}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
