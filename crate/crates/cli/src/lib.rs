// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Library half of the `dfslab` command-line tool.
//!
//! Every command is a pure function from a resolved configuration to a
//! serializable report; `main.rs` only parses flags and writes the result.
//! Reports carry [`SCHEMA_VERSION`] and the resolved configuration, and
//! contain nothing that varies between runs with equal inputs.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use exchange_dfs::combinatorics::{
    dicke_multiplicity, encoded_qubit_count, singlet_multiplicity, standard_tableaux_count, MultiplicityTable, Spin,
    YoungDiagram,
};
use exchange_dfs::concat::{
    single_event_sweep, Aggregate, ErrorRateModel, MonteCarloConfig, ThetaModel, TrialReport, MAX_CLUSTERS,
};
use exchange_dfs::dfs::{
    check_dfs_condition, check_invariance, dfs_basis, exchange_invariance, four_qubit_exchange_table,
    verify_constant_j, MAX_CONSTANT_J_QUBITS,
};
use exchange_dfs::operator::{exchange_hamiltonian, exchange_operator, heisenberg_exchange, qubit_pairs, su2_residual};
use exchange_dfs::{ConcatSimulator, ExchangeModel, StabilizerCode};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the directory for reports when `--out` is absent.
pub const OUT_DIR_ENV: &str = "DFSLAB_OUT_DIR";

/// Largest K for which `dims` also reports the numerically extracted kernel dimension.
pub const MAX_KERNEL_CHECK: u32 = 10;

/// Angles of the single-event sweep.
pub const SWEEP_THETAS: [f64; 4] = [0.1, 0.5, 1.0, std::f64::consts::FRAC_PI_3];

/// Fidelity every sweep sub-trial must reach.
pub const SWEEP_FIDELITY: f64 = 1.0 - 1e-8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] exchange_dfs::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// Process exit code: 2 for anything the user can fix by changing the invocation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                exchange_dfs::Error::DfsViolation { .. } | exchange_dfs::Error::InconsistentState(_) => 1,
                _ => 2,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

/// Anything a command produces.
pub trait Report: Serialize {
    /// Human-readable rendering.
    fn table(&self) -> String;

    /// Whether the report represents success (exit code 0 vs 1).
    fn passed(&self) -> bool {
        true
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }
}

/// Where a report goes: an explicit path, `$DFSLAB_OUT_DIR/<command>.<ext>`, or stdout.
pub fn resolve_output(out: Option<&Path>, out_dir: Option<&Path>, command: &str, format: Format) -> Option<PathBuf> {
    let ext = match format {
        Format::Json => "json",
        Format::Table => "txt",
    };
    out.map(Path::to_path_buf).or_else(|| out_dir.map(|d| d.join(format!("{command}.{ext}"))))
}

pub fn write_report(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|source| CliError::Io { path: parent.to_path_buf(), source })?;
    }
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn sci(x: f64) -> String {
    format!("{x:.2e}")
}

// ---------------------------------------------------------------- dims

#[derive(Debug, Clone, Serialize)]
pub struct DimsConfig {
    pub k_max: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimsRow {
    pub k: u32,
    /// Exact, as a decimal string.
    pub dfs_dimension: String,
    pub encoded_qubits: f64,
    /// Singlet count from the Catalan formula, the S = 0 Dicke multiplicity
    /// and the two-row hook formula all agree.
    pub hook_check: bool,
    /// Dimension of the numerically extracted `S²` kernel (small K only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_dimension: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimsReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub config: DimsConfig,
    pub rows: Vec<DimsRow>,
}

impl Report for DimsReport {
    fn table(&self) -> String {
        let mut s = format!(
            "{:>5} {:>24} {:>14} {:>10} {:>8}\n",
            "K", "dfs_dimension", "encoded_qubits", "hook_check", "kernel"
        );
        for r in &self.rows {
            let kernel = r.kernel_dimension.map_or_else(|| "-".to_string(), |d| d.to_string());
            let _ = writeln!(
                s,
                "{:>5} {:>24} {:>14.6} {:>10} {:>8}",
                r.k, r.dfs_dimension, r.encoded_qubits, r.hook_check, kernel
            );
        }
        s
    }

    fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.hook_check && r.kernel_dimension.is_none_or(|d| d.to_string() == r.dfs_dimension))
    }
}

/// DFS dimension and encoded-qubit count for every even `K ≤ k_max`.
pub fn cmd_dims(k_max: u32) -> Result<DimsReport> {
    if k_max < 2 {
        return Err(CliError::Config(format!("--k-max must be at least 2, got {k_max}")));
    }
    let mut rows = Vec::new();
    for k in (2..=k_max).step_by(2) {
        let singlets = singlet_multiplicity(k)?;
        let dicke = dicke_multiplicity(k, Spin::ZERO)?;
        let hooks = standard_tableaux_count(&YoungDiagram::rectangle(k / 2, 2)?);
        let kernel_dimension = if k <= MAX_KERNEL_CHECK { Some(dfs_basis::<f64>(k as usize)?.dim()) } else { None };
        rows.push(DimsRow {
            k,
            dfs_dimension: singlets.to_string(),
            encoded_qubits: encoded_qubit_count(k)?,
            hook_check: singlets == dicke && singlets == hooks,
            kernel_dimension,
        });
    }
    Ok(DimsReport { schema_version: SCHEMA_VERSION, command: "dims", config: DimsConfig { k_max }, rows })
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn measured(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        let status = if residual < tol { Status::Pass } else { Status::Fail };
        Check { name: name.into(), status, residual: Some(residual), detail: None }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub k: usize,
    pub tol: f64,
    /// Couplings of the `--model` file, if one was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub couplings: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub config: VerifyConfig,
    pub dfs_dimension: usize,
    pub nu: f64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report for VerifyReport {
    fn table(&self) -> String {
        let mut s = format!(
            "K = {}  tol = {}  dfs_dimension = {}  nu(J=1) = {}\n",
            self.config.k,
            sci(self.config.tol),
            self.dfs_dimension,
            self.nu
        );
        let _ = writeln!(s, "{:<34} {:>8} {:>10}  detail", "check", "status", "residual");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let residual = c.residual.map_or_else(|| "-".to_string(), sci);
            let _ = writeln!(s, "{:<34} {:>8} {:>10}  {}", c.name, status, residual, c.detail.as_deref().unwrap_or(""));
        }
        let _ = writeln!(s, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        s
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

/// Runs every identity check for a K-qubit register.
///
/// With `model`, additionally checks that its exchange Hamiltonian leaves the
/// DFS invariant; `k` must then match the model size.
pub fn cmd_verify(k: usize, tol: f64, model: Option<&ExchangeModel>) -> Result<VerifyReport> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Config(format!("--tol must be a positive number, got {tol}")));
    }
    if k < 2 || !k.is_multiple_of(2) || k > MAX_CONSTANT_J_QUBITS {
        return Err(CliError::Config(format!("--k must be even and between 2 and {MAX_CONSTANT_J_QUBITS}, got {k}")));
    }
    if let Some(m) = model {
        if m.num_qubits() != k {
            return Err(CliError::Config(format!("--model has {} qubits but --k is {k}", m.num_qubits())));
        }
    }

    let mut checks = vec![Check::measured("su2_commutators", su2_residual::<f64>(k)?, tol)];

    let mut heisenberg = 0.0f64;
    for (i, j) in qubit_pairs(k) {
        let d = exchange_operator::<f64>(k, i, j)?.max_abs_diff(&heisenberg_exchange(k, i, j)?)?;
        heisenberg = heisenberg.max(d);
    }
    checks.push(Check::measured("exchange_heisenberg_form", heisenberg, tol));

    let basis = dfs_basis::<f64>(k)?;
    checks.push(Check::measured("dfs_condition", check_dfs_condition(&basis, tol)?.max_residual, tol));
    let inv = exchange_invariance(&basis)?;
    checks.push(Check::measured("spin_exchange_commutators", inv.max_commutator, tol));
    checks.push(Check::measured("dfs_leakage", inv.max_leakage, tol));

    let cj = verify_constant_j::<f64>(k, 1.0)?;
    checks.push(Check::measured("constant_j_identity", cj.identity_residual, tol));
    checks
        .push(Check::measured("constant_j_eigenvalue", cj.eigen_residual, tol).with_detail(format!("nu = {}", cj.nu)));

    if k == 4 {
        for row in four_qubit_exchange_table::<f64>()? {
            let (i, j) = row.pair;
            checks.push(Check::measured(format!("encoded_exchange_E{i}{j}"), row.residual, tol));
        }
    } else {
        checks.push(Check {
            name: "encoded_exchange".into(),
            status: Status::Skipped,
            residual: None,
            detail: Some(format!("skipped: d={}", basis.dim())),
        });
    }

    if let Some(m) = model {
        let h = exchange_hamiltonian(m)?;
        let leak = check_invariance(&h, &basis, tol)?.leakage;
        checks.push(Check::measured("model_hamiltonian_leakage", leak, tol));
    }

    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        config: VerifyConfig { k, tol, couplings: model.map(ExchangeModel::rows) },
        dfs_dimension: basis.dim(),
        nu: cj.nu,
        checks,
        passed,
    })
}

// ---------------------------------------------------------------- simulate

/// Resolved `simulate` options.
#[derive(Debug, Clone, Serialize)]
pub struct SimulateConfig {
    pub seed: u64,
    pub n_trials: usize,
    /// Poisson mean per cluster pair, order 12, 13, 14, 23, 24, 34.
    pub pair_rates: [f64; 6],
    pub theta: ThetaModel,
    pub sweep: bool,
}

impl SimulateConfig {
    /// Uniform rate `rate` on every pair.
    pub fn uniform(seed: u64, n_trials: usize, rate: f64, theta: ThetaModel) -> Result<Self> {
        let rates = ErrorRateModel::uniform(rate)?;
        Ok(Self { seed, n_trials, pair_rates: rates.pair_rates, theta, sweep: false })
    }

    /// Rates `2|J_ij|τ` from a four-qubit cluster model and cycle time `τ`.
    pub fn from_model(
        seed: u64,
        n_trials: usize,
        model: &ExchangeModel,
        cycle_time: f64,
        theta: ThetaModel,
    ) -> Result<Self> {
        let rates = ErrorRateModel::from_couplings(model, cycle_time)?;
        Ok(Self { seed, n_trials, pair_rates: rates.pair_rates, theta, sweep: false })
    }

    /// The fixed (cluster × pair × angle) grid instead of Monte Carlo sampling.
    pub fn sweep(seed: u64) -> Self {
        Self {
            seed,
            n_trials: MAX_CLUSTERS * 6 * SWEEP_THETAS.len(),
            pair_rates: [0.0; 6],
            theta: ThetaModel::default(),
            sweep: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulateReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub config: SimulateConfig,
    pub seed: u64,
    pub n_trials: usize,
    pub trials: Vec<TrialReport>,
    pub aggregate: Aggregate,
    /// Sweep mode only: every sub-trial reached the required fidelity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep_passed: Option<bool>,
}

impl Report for SimulateReport {
    fn table(&self) -> String {
        let a = &self.aggregate;
        let mut s = format!(
            "seed = {}  trials = {}  mode = {}\n",
            self.seed,
            self.n_trials,
            if self.config.sweep { "sweep" } else { "monte-carlo" }
        );
        let _ = writeln!(s, "mean fidelity        {:.12}", a.mean_fidelity);
        let _ = writeln!(s, "min fidelity         {:.12}", a.min_fidelity);
        let _ = writeln!(s, "1 - min fidelity     {}", sci(1.0 - a.min_fidelity));
        let _ = writeln!(s, "mean fidelity before {:.12}", a.mean_fidelity_before);
        let _ = writeln!(s, "syndromes:");
        for (syn, n) in &a.syndrome_histogram {
            let _ = writeln!(s, "  {syn} {n}");
        }
        let _ = writeln!(s, "events per trial:");
        for (events, n) in &a.event_count_histogram {
            let _ = writeln!(s, "  {events} {n}");
        }
        if let Some(p) = self.sweep_passed {
            let _ = writeln!(s, "sweep: {}", if p { "PASS" } else { "FAIL" });
        }
        s
    }

    fn passed(&self) -> bool {
        self.sweep_passed.unwrap_or(true)
    }
}

/// Monte Carlo over the concatenated code, or the single-event sweep.
pub fn cmd_simulate(config: &SimulateConfig) -> Result<SimulateReport> {
    let sim = ConcatSimulator::new()?;
    let (trials, aggregate, sweep_passed) = if config.sweep {
        let trials = single_event_sweep(&sim, &SWEEP_THETAS, config.seed)?;
        let ok = trials.iter().all(|t| t.fidelity_after >= SWEEP_FIDELITY);
        let agg = Aggregate::from_trials(&trials);
        (trials, agg, Some(ok))
    } else {
        let mc = MonteCarloConfig {
            n_trials: config.n_trials,
            seed: config.seed,
            rate: ErrorRateModel::new(config.pair_rates)?,
            theta: config.theta,
        };
        mc.validate()?;
        let report = sim.run_monte_carlo(&mc)?;
        (report.trials, report.aggregate, None)
    };
    Ok(SimulateReport {
        schema_version: SCHEMA_VERSION,
        command: "simulate",
        config: config.clone(),
        seed: config.seed,
        n_trials: trials.len(),
        trials,
        aggregate,
        sweep_passed,
    })
}

// ---------------------------------------------------------------- small exports

/// Pre-rendered JSON document with a table fallback.
#[derive(Debug, Clone)]
pub struct Document {
    pub json: String,
    pub text: String,
}

impl Serialize for Document {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: serde_json::Value = serde_json::from_str(&self.json).map_err(serde::ser::Error::custom)?;
        v.serialize(s)
    }
}

impl Report for Document {
    fn table(&self) -> String {
        self.text.clone()
    }

    /// The pre-rendered JSON verbatim, so float formatting is not re-done.
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Table => self.text.clone(),
        }
    }
}

/// Singlet basis of K qubits.
pub fn cmd_basis(k: usize) -> Result<Document> {
    let basis = dfs_basis::<f64>(k)?;
    let mut text = format!("K = {k}, dimension {}\n", basis.dim());
    for (n, v) in basis.vectors().iter().enumerate() {
        let _ = writeln!(text, "v{n}:");
        for (x, a) in v.amplitudes().iter().enumerate() {
            if a.norm() > 1e-15 {
                let _ = writeln!(text, "  {} {:+.12}", exchange_dfs::operator::format_bits(x, k), a.re);
            }
        }
    }
    Ok(Document { json: basis.to_json(), text })
}

/// Five-qubit-code syndrome lookup table.
pub fn cmd_syndromes() -> Result<Document> {
    let code = StabilizerCode::perfect();
    let rows: Vec<serde_json::Value> = exchange_dfs::qecc::Syndrome::all()
        .map(|s| serde_json::json!({ "syndrome": s.to_string(), "correction": code.correction(s).to_string() }))
        .collect();
    let json = serde_json::to_string(&serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "generators": code.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "logical_x": code.logical_x().to_string(),
        "logical_z": code.logical_z().to_string(),
        "table": rows,
    }))
    .expect("json values serialize");
    Ok(Document { json, text: code.syndrome_table_text() })
}

/// Exact multiplet multiplicities of K qubits.
pub fn cmd_multiplicities(k: u32) -> Result<Document> {
    if k == 0 {
        return Err(CliError::Config("--k must be at least 1".into()));
    }
    let table = MultiplicityTable::new(k)?;
    let mut text = format!("{:>6} {:>8} multiplicity\n", "S", "2S+1");
    for (s, m) in table.iter() {
        let _ = writeln!(text, "{:>6} {:>8} {m}", s.to_string(), s.multiplet_size());
    }
    let _ = writeln!(text, "total states: {}", table.total_states());
    Ok(Document { json: table.to_json(), text })
}
