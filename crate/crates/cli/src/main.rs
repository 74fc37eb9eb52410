// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! `dfslab`: verification and simulation of decoherence-free subspaces under
//! exchange errors.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use exchange_dfs::concat::ThetaModel;
use exchange_dfs::ExchangeModel;
use exchange_dfs_cli::{
    cmd_basis, cmd_dims, cmd_multiplicities, cmd_simulate, cmd_syndromes, cmd_verify, resolve_output, write_report,
    CliError, Format, Report, SimulateConfig, OUT_DIR_ENV,
};

#[derive(Parser)]
#[command(name = "dfslab", version, about = "Decoherence-free subspaces under exchange errors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Output file; defaults to $DFSLAB_OUT_DIR/<command>.<ext>, else stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,

    #[arg(long, env = OUT_DIR_ENV, hide_env_values = true, hide = true)]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// DFS dimension and encoded qubits for every even K up to --k-max.
    Dims {
        #[arg(long, default_value_t = 12)]
        k_max: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Check the exchange/collective-spin identities for one register size.
    Verify {
        /// Even register size, at most 8.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1e-10, allow_negative_numbers = true)]
        tol: f64,
        /// Coupling-matrix JSON file (`{"num_qubits": K, "couplings": [[...]]}`).
        #[arg(long)]
        model: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Monte Carlo of the 20-qubit concatenated code.
    Simulate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Mean number of exchange events per cluster pair per correction cycle.
        #[arg(long, conflicts_with = "model", allow_negative_numbers = true)]
        rate: Option<f64>,
        /// Four-qubit cluster coupling file; rates become 2|J_ij|·cycle_time.
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, requires = "model", allow_negative_numbers = true)]
        cycle_time: Option<f64>,
        /// Fixed event angle instead of Uniform[0, π).
        #[arg(long, allow_negative_numbers = true)]
        theta: Option<f64>,
        /// Run the 5 × 6 × 4 single-event grid instead of sampling.
        #[arg(long, conflicts_with_all = ["rate", "model", "theta", "trials"])]
        sweep: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Export the singlet basis of K qubits.
    Basis {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Print the five-qubit-code syndrome table.
    Syndromes {
        #[command(flatten)]
        output: Output,
    },
    /// Exact spin-multiplet multiplicities of K qubits.
    Multiplicities {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        output: Output,
    },
}

fn emit<R: Report>(report: &R, name: &str, output: &Output) -> Result<bool, CliError> {
    let format = Format::from(output.format);
    let text = report.render(format);
    match resolve_output(output.out.as_deref(), output.out_dir.as_deref(), name, format) {
        Some(path) => {
            write_report(&path, &text)?;
            eprintln!("{name}: wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(report.passed())
}

fn load_model(path: &PathBuf) -> Result<ExchangeModel, CliError> {
    Ok(ExchangeModel::load(path)?)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Dims { k_max, output } => emit(&cmd_dims(k_max)?, "dims", &output),
        Command::Verify { k, tol, model, output } => {
            let model = model.as_ref().map(load_model).transpose()?;
            let k = match (k, &model) {
                (Some(k), _) => k,
                (None, Some(m)) => m.num_qubits(),
                (None, None) => return Err(CliError::Config("verify needs --k or --model".into())),
            };
            emit(&cmd_verify(k, tol, model.as_ref())?, "verify", &output)
        }
        Command::Simulate { seed, trials, rate, model, cycle_time, theta, sweep, output } => {
            let theta = match theta {
                Some(t) if !t.is_finite() => return Err(CliError::Config("--theta must be finite".into())),
                Some(t) => ThetaModel::Fixed { theta: t },
                None => ThetaModel::default(),
            };
            let config = if sweep {
                SimulateConfig::sweep(seed)
            } else if let Some(path) = model {
                let cycle_time = cycle_time.ok_or_else(|| CliError::Config("--model needs --cycle-time".into()))?;
                SimulateConfig::from_model(seed, trials, &load_model(&path)?, cycle_time, theta)?
            } else {
                SimulateConfig::uniform(seed, trials, rate.unwrap_or(0.0), theta)?
            };
            emit(&cmd_simulate(&config)?, "simulate", &output)
        }
        Command::Basis { k, output } => emit(&cmd_basis(k)?, "basis", &output),
        Command::Syndromes { output } => emit(&cmd_syndromes()?, "syndromes", &output),
        Command::Multiplicities { k, output } => emit(&cmd_multiplicities(k)?, "multiplicities", &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("dfslab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
