//! `qko`: character tables, eta invariants and the groups `KSp(M^{4ν-1})`
//! and `ko_{4k-1}(BQ_ℓ)` of generalized quaternion groups.

mod commands;
mod error;
mod expr;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qko_core::group::SubgroupId;

use crate::error::CliError;
use crate::report::Report;

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qko", version, about = "K-theory of generalized quaternion groups via eta invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character table, Frobenius-Schur indicators and RO/RSp spans
    Chartable {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// KSp of the space form M^{4nu-1}(Q_ell, nu*gamma_1)
    Ksp {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        nu: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// ko_{4k-1}(BQ_ell)
    Ko {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Eta invariant of sigma (dimension 0), optionally against a bundle
    Eta {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        nu: usize,
        /// e.g. "Theta1", "Delta^2", "gamma_1 - 2rho0"
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        bundle: Option<String>,
        #[arg(long, default_value = "full", value_parser = commands::parse_subgroup)]
        subgroup: SubgroupId,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the verification suite; exits 1 if any check fails
    Verify {
        /// Comma-separated list of ell values
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        ell: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        max_nu: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn dispatch(command: Command) -> Result<(Report, Format), CliError> {
    Ok(match command {
        Command::Chartable { ell, format } => (commands::chartable(ell)?, format),
        Command::Ksp { ell, nu, format } => (commands::ksp(ell, nu)?, format),
        Command::Ko { ell, k, format } => (commands::ko(ell, k)?, format),
        Command::Eta {
            ell,
            nu,
            sigma,
            bundle,
            subgroup,
            format,
        } => (commands::eta(ell, nu, &sigma, bundle.as_deref(), subgroup)?, format),
        Command::Verify {
            ell,
            max_nu,
            max_k,
            format,
        } => (verify::run(&ell, max_nu, max_k)?, format),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((report, format)) => {
            match format {
                Format::Json => println!("{}", report.render_json()),
                Format::Text => print!("{}", report.render_text()),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
