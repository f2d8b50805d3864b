use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bartab_cli::{
    cmd_chartable, cmd_qfun, cmd_srank, cmd_tableaux, cmd_verify, resolve_cache_dir, CliResult,
    RunReport, Suite, TableFormat, TableauSelection,
};
use bartab_core::partitions::{Partition, StrictPartition};
use clap::{Parser, Subcommand};

/// Bar tableaux, shifted rank, spin characters and Schur Q-functions.
#[derive(Parser, Debug)]
#[command(name = "bartab", version)]
struct Cli {
    /// Lift the default size bounds.
    #[arg(long, global = true)]
    allow_slow: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shifted rank of a strict partition.
    Srank {
        /// Comma-separated distinct parts, e.g. 9,7,6,3,1.
        #[arg(long)]
        shape: StrictPartition,
        /// Also run the exhaustive search and compare.
        #[arg(long)]
        check: bool,
    },
    /// Enumerate or count bar tableaux of a shape.
    Tableaux {
        #[arg(long)]
        shape: StrictPartition,
        /// Restrict to tableaux of this type (odd parts).
        #[arg(long = "type")]
        class: Option<Partition>,
        /// Keep only tableaux with srank bars.
        #[arg(long)]
        minimal: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Spin character table of weight n.
    Chartable {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "text")]
        format: TableFormat,
        /// Cache directory; defaults to $BARTAB_CACHE_DIR.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Q-function of a strict partition in the power-sum basis.
    Qfun {
        #[arg(long)]
        shape: StrictPartition,
        /// Also print the principal specialization and its t-order.
        #[arg(long)]
        specialize: bool,
        /// text or records.
        #[arg(long, default_value = "text")]
        format: TableFormat,
    },
    /// Run verification suites for every n up to a bound.
    Verify {
        /// Largest weight; defaults to 10, lowered to each suite's bound.
        #[arg(long)]
        n: Option<u32>,
        /// Comma-separated suites: srank, vanishing, qdegree, lemmas, independence.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "srank,vanishing,qdegree,lemmas,independence"
        )]
        suites: Vec<Suite>,
    },
}

fn run(cli: Cli) -> CliResult<RunReport> {
    let slow = cli.allow_slow;
    match cli.command {
        Command::Srank { shape, check } => cmd_srank(&shape, check, slow),
        Command::Tableaux {
            shape,
            class,
            minimal,
            count,
        } => {
            let selection = if minimal {
                TableauSelection::Minimal
            } else {
                TableauSelection::All
            };
            cmd_tableaux(&shape, class.as_ref(), selection, count, slow)
        }
        Command::Chartable {
            n,
            format,
            cache_dir,
        } => cmd_chartable(n, format, resolve_cache_dir(cache_dir), slow),
        Command::Qfun {
            shape,
            specialize,
            format,
        } => cmd_qfun(&shape, specialize, format == TableFormat::Records, slow),
        Command::Verify { n, suites } => cmd_verify(n, &suites, slow),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(report.render().as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            eprintln!("{}", report.summary());
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("bartab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
