//! `conical`: evaluation tables, identity checks and verification suites.
//!
//! Exit status is 0 when no item fails, 1 when one does (or the output cannot
//! be written) and 2 on invalid arguments.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use commands::{AuditArgs, ClassicalArgs, DeltaArgs, EvalArgs, IdentityArgs, KernelArgs, SuiteArgs, Usage};
use output::{Format, Payload};

#[derive(Debug, Parser)]
#[command(name = "conical", version, about = "Conical Ferrers functions of imaginary order and checks of their delta-normalized orthogonality")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Output file; standard output when neither this nor an output directory is given.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Directory receiving `<command>.<format>` when --output is absent.
    #[arg(long, global = true, env = "CONICAL_OUTPUT_DIR")]
    output_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Table of P or Q over x.
    Eval(EvalArgs),
    /// Table of a kernel's delta coefficients over q.
    Kernel(KernelArgs),
    /// Orthogonality integral on a truncated interval against its boundary terms.
    VerifyIdentity(IdentityArgs),
    /// Smeared delta coefficients against the closed-form kernels.
    VerifyDelta(DeltaArgs),
    /// Integer-order orthogonality fixtures.
    Classical(ClassicalArgs),
    /// Q degree-conjugation and integer-degree slot audits.
    Audit(AuditArgs),
    /// The full verification suite.
    Suite(SuiteArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Kernel(_) => "kernel",
            Command::VerifyIdentity(_) => "verify-identity",
            Command::VerifyDelta(_) => "verify-delta",
            Command::Classical(_) => "classical",
            Command::Audit(_) => "audit",
            Command::Suite(_) => "suite",
        }
    }

    fn run(&self) -> Result<Payload, Usage> {
        match self {
            Command::Eval(a) => commands::eval_table(a),
            Command::Kernel(a) => commands::kernel_table(a),
            Command::VerifyIdentity(a) => commands::verify_identity(a),
            Command::VerifyDelta(a) => commands::verify_delta(a),
            Command::Classical(a) => commands::classical(a),
            Command::Audit(a) => commands::audit(a),
            Command::Suite(a) => commands::suite(a),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let payload = match cli.command.run() {
        Ok(p) => p,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let config = serde_json::to_value(&cli.command).expect("arguments serialize to JSON");
    let dest = output::destination(cli.output.as_deref(), cli.output_dir.as_deref(), cli.command.name(), cli.format);
    let written = payload.render(config, cli.format).and_then(|text| output::write(&text, dest.as_deref()));
    if let Err(msg) = written {
        eprintln!("error: cannot write output: {msg}");
        return ExitCode::from(1);
    }
    if payload.has_failure() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
