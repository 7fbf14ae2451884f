//! `kgtube`: invariant audits, candidate sweeps and tables for the kgtube
//! library.
//!
//! Exit codes: 0 success, 1 a checked invariant failed, 2 bad flags, config
//! or output path, 3 a numeric pole or overflow. Tables are written in full
//! before a nonzero exit.

mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{Flags, SweepConfig};
use error::{CliResult, Tally};
use output::Table;

#[derive(Parser)]
#[command(name = "kgtube", version, about = "Mode-space audits for Klein-Gordon fields on Minkowski and AdS tubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Runs a quick invariant suite over every module.
    Selfcheck(Flags),
    /// Harmonic values at sample points and ladder coefficients.
    HarmonicsTable(Flags),
    /// Condition report for each (omega, l) of a j-factor set.
    JfactorAudit(Flags),
    /// Candidate values, sign landscape and boost residuals.
    CandidateSweep(Flags),
    /// Flux and direction verdicts of the closed-form radial modes.
    FluxClassify(Flags),
}

type Job = fn(&SweepConfig) -> CliResult<(Table, Tally)>;

fn run(cli: Cli) -> CliResult<()> {
    let (flags, job): (&Flags, Job) = match &cli.command {
        Command::Selfcheck(f) => (f, |_| commands::selfcheck::run()),
        Command::HarmonicsTable(f) => (f, commands::harmonics_table::run),
        Command::JfactorAudit(f) => (f, commands::jfactor_audit::run),
        Command::CandidateSweep(f) => (f, commands::candidate_sweep::run),
        Command::FluxClassify(f) => (f, commands::flux_classify::run),
    };
    let cfg = SweepConfig::resolve(flags)?;
    let (table, tally) = job(&cfg)?;
    table.write(cfg.format, cfg.out.as_deref())?;
    tally.finish()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("kgtube: {f}");
            f.exit_code()
        }
    }
}
