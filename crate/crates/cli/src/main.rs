//! `btsa` — command-line front end for the curved-beam stiffness toolkit.
//!
//! Angles cross this boundary in degrees and are converted to radians
//! exactly once; everything below the CLI works in radians.
//!
//! Exit codes: 0 success; 1 conformance verdict FAIL (`verify` only);
//! 2 invalid or inconsistent input; 3 math-domain failure; 4 file I/O
//! failure. Clap's own usage errors also exit 2.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use btsa_core::ModelError;
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "btsa",
    version,
    about = "Lateral stiffness, design sweeps, and measurement reduction \
             for a chain-reinforced pneumatic bending actuator"
)]
struct Cli {
    /// JSON configuration file; explicit command-line flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form lateral stiffness at one bending angle.
    Stiffness(commands::StiffnessArgs),
    /// Stiffness-versus-angle tables and plots across aspect ratios.
    Sweep(commands::SweepArgs),
    /// Chain separation verdict for an applied tip force.
    Break(commands::BreakArgs),
    /// Constant-curvature backbone coordinates.
    Kinematics(commands::KinematicsArgs),
    /// Reduce a measurement CSV to stiffness fits, ratios, and a report.
    Analyze(commands::AnalyzeArgs),
    /// Check the closed form against an independent quadrature reference.
    Verify(commands::VerifyArgs),
}

fn exit_code_for(error: &ModelError) -> u8 {
    match error {
        ModelError::Domain { .. } | ModelError::Inconsistent(_) => 2,
        ModelError::MathDomain(_) => 3,
        ModelError::Io { .. } => 4,
    }
}

fn run(cli: Cli) -> Result<i32, ModelError> {
    let mut cfg = config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Stiffness(args) => {
            args.overrides.apply(&mut cfg);
            commands::stiffness(&cfg, &args)
        }
        Command::Sweep(args) => {
            args.overrides.apply(&mut cfg);
            commands::sweep(&cfg, &args)
        }
        Command::Break(args) => commands::break_verdict(&cfg, &args),
        Command::Kinematics(args) => commands::kinematics(&cfg, &args),
        Command::Analyze(args) => commands::analyze(&cfg, &args),
        Command::Verify(args) => commands::verify(&cfg, &args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(u8::try_from(code).unwrap_or(1)),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(exit_code_for(&error))
        }
    }
}
