// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ConcatSimulator, ConcatState, ErrorEvent, CLUSTER_SIZE, MAX_CLUSTERS};
use crate::error::{Error, Result};
use crate::operator::{qubit_pairs, ExchangeModel, StateVector};
use crate::scalar::{Real, C};

pub const SCHEMA_VERSION: u32 = 1;

const PAIRS_PER_CLUSTER: usize = 6;

/// Mean number of exchange events per cluster pair per correction cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorRateModel {
    /// Lexicographic pair order: 12, 13, 14, 23, 24, 34.
    pub pair_rates: [f64; PAIRS_PER_CLUSTER],
}

impl ErrorRateModel {
    pub fn uniform(rate: f64) -> Result<Self> {
        Self::new([rate; PAIRS_PER_CLUSTER])
    }

    pub fn new(pair_rates: [f64; PAIRS_PER_CLUSTER]) -> Result<Self> {
        for r in pair_rates {
            if !(r.is_finite() && r >= 0.0) {
                return Err(Error::Config(format!("error rate must be finite and non-negative, got {r}")));
            }
        }
        Ok(Self { pair_rates })
    }

    /// `λ_ij = 2|J_ij|·τ`: exchange errors occur on a time scale `1/2|J_ij|`,
    /// and `τ` is the time between correction rounds.
    pub fn from_couplings(model: &ExchangeModel<f64>, cycle_time: f64) -> Result<Self> {
        if model.num_qubits() != CLUSTER_SIZE {
            return Err(Error::Config(format!(
                "cluster coupling model must have {CLUSTER_SIZE} qubits, got {}",
                model.num_qubits()
            )));
        }
        if !(cycle_time.is_finite() && cycle_time >= 0.0) {
            return Err(Error::Config(format!("cycle time must be non-negative, got {cycle_time}")));
        }
        let mut rates = [0.0; PAIRS_PER_CLUSTER];
        for (k, (i, j)) in qubit_pairs(CLUSTER_SIZE).enumerate() {
            rates[k] = 2.0 * model.coupling(i, j).abs() * cycle_time;
        }
        Self::new(rates)
    }

    pub fn is_zero(&self) -> bool {
        self.pair_rates.iter().all(|&r| r == 0.0)
    }
}

/// Distribution of the angle `θ = J_ij·t` of each event.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThetaModel {
    Uniform { low: f64, high: f64 },
    Fixed { theta: f64 },
}

impl Default for ThetaModel {
    fn default() -> Self {
        ThetaModel::Uniform { low: 0.0, high: std::f64::consts::PI }
    }
}

impl ThetaModel {
    fn validate(&self) -> Result<()> {
        match *self {
            ThetaModel::Uniform { low, high } if low.is_finite() && high.is_finite() && low < high => Ok(()),
            ThetaModel::Fixed { theta } if theta.is_finite() => Ok(()),
            other => Err(Error::Config(format!("invalid angle model {other:?}"))),
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            ThetaModel::Uniform { low, high } => rng.random_range(low..high),
            ThetaModel::Fixed { theta } => theta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub n_trials: usize,
    pub seed: u64,
    pub rate: ErrorRateModel,
    #[serde(default)]
    pub theta: ThetaModel,
}

impl MonteCarloConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_trials == 0 {
            return Err(Error::Config("n_trials must be at least 1".into()));
        }
        ErrorRateModel::new(self.rate.pair_rates)?;
        self.theta.validate()
    }
}

/// Per-trial record. Fidelities are `|⟨reference|ψ⟩|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trial: usize,
    pub seed: u64,
    pub events: Vec<ErrorEvent>,
    pub syndromes: Vec<String>,
    pub fidelity_before: f64,
    pub fidelity_after: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub mean_fidelity: f64,
    pub min_fidelity: f64,
    pub mean_fidelity_before: f64,
    pub syndrome_histogram: BTreeMap<String, u64>,
    /// Number of trials by event count.
    pub event_count_histogram: BTreeMap<usize, u64>,
}

impl Aggregate {
    pub fn from_trials(trials: &[TrialReport]) -> Self {
        let n = trials.len().max(1) as f64;
        let mut syndrome_histogram = BTreeMap::new();
        let mut event_count_histogram = BTreeMap::new();
        for t in trials {
            for s in &t.syndromes {
                *syndrome_histogram.entry(s.clone()).or_insert(0) += 1;
            }
            *event_count_histogram.entry(t.events.len()).or_insert(0) += 1;
        }
        Self {
            mean_fidelity: trials.iter().map(|t| t.fidelity_after).sum::<f64>() / n,
            min_fidelity: trials.iter().map(|t| t.fidelity_after).fold(f64::INFINITY, f64::min),
            mean_fidelity_before: trials.iter().map(|t| t.fidelity_before).sum::<f64>() / n,
            syndrome_histogram,
            event_count_histogram,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloReport {
    pub schema_version: u32,
    pub seed: u64,
    pub n_trials: usize,
    pub config: MonteCarloConfig,
    pub trials: Vec<TrialReport>,
    pub aggregate: Aggregate,
}

/// Independent stream for one trial; identical whether trials run serially or in parallel.
fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Uniformly random point on the Bloch sphere.
fn random_logical<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Result<StateVector<T>> {
    let cos_polar: f64 = 2.0 * rng.random::<f64>() - 1.0;
    let azimuth: f64 = std::f64::consts::TAU * rng.random::<f64>();
    let half = cos_polar.clamp(-1.0, 1.0).acos() / 2.0;
    let (a, b) = (half.cos(), half.sin());
    StateVector::new(
        1,
        vec![C::new(T::lit(a), T::zero()), C::new(T::lit(b * azimuth.cos()), T::lit(b * azimuth.sin()))],
    )
}

fn sample_events<R: Rng + ?Sized>(rate: &ErrorRateModel, theta: &ThetaModel, rng: &mut R) -> Result<Vec<ErrorEvent>> {
    let mut events = Vec::new();
    for cluster in 1..=MAX_CLUSTERS {
        for (k, (i, j)) in qubit_pairs(CLUSTER_SIZE).enumerate() {
            let lambda = rate.pair_rates[k];
            if lambda == 0.0 {
                continue;
            }
            let dist = Poisson::new(lambda).map_err(|e| Error::Config(e.to_string()))?;
            let count = dist.sample(rng) as u64;
            for _ in 0..count {
                events.push(ErrorEvent { cluster, pair: (i, j), theta: 0.0 });
            }
        }
    }
    events.shuffle(rng);
    for ev in &mut events {
        ev.theta = theta.sample(rng);
    }
    Ok(events)
}

impl<T: Real> ConcatSimulator<T> {
    /// One correction cycle: encode a random logical state, apply sampled
    /// exchange events, run one recovery round.
    pub fn run_trial(&self, config: &MonteCarloConfig, trial: usize) -> Result<TrialReport> {
        let mut rng = trial_rng(config.seed, trial);
        let logical = random_logical::<T, _>(&mut rng)?;
        let reference = self.code().encode(&logical)?;
        let events = sample_events(&config.rate, &config.theta, &mut rng)?;
        let mut state = ConcatState::encoded(reference.clone())?;
        for ev in &events {
            state = self.apply_exchange_event(&state, ev)?;
        }
        let rec = self.recover(&state, &reference, &mut rng)?;
        Ok(TrialReport {
            trial,
            seed: config.seed,
            events,
            syndromes: vec![rec.syndrome.to_string()],
            fidelity_before: rec.fidelity_before.as_f64(),
            fidelity_after: rec.fidelity_after.as_f64(),
        })
    }

    /// Runs all trials in parallel; the report is identical to a serial run.
    pub fn run_monte_carlo(&self, config: &MonteCarloConfig) -> Result<MonteCarloReport> {
        config.validate()?;
        let trials =
            (0..config.n_trials).into_par_iter().map(|t| self.run_trial(config, t)).collect::<Result<Vec<_>>>()?;
        Ok(MonteCarloReport {
            schema_version: SCHEMA_VERSION,
            seed: config.seed,
            n_trials: config.n_trials,
            config: *config,
            aggregate: Aggregate::from_trials(&trials),
            trials,
        })
    }

    /// Serial reference implementation of [`Self::run_monte_carlo`].
    pub fn run_monte_carlo_serial(&self, config: &MonteCarloConfig) -> Result<MonteCarloReport> {
        config.validate()?;
        let trials = (0..config.n_trials).map(|t| self.run_trial(config, t)).collect::<Result<Vec<_>>>()?;
        Ok(MonteCarloReport {
            schema_version: SCHEMA_VERSION,
            seed: config.seed,
            n_trials: config.n_trials,
            config: *config,
            aggregate: Aggregate::from_trials(&trials),
            trials,
        })
    }
}

/// Every (cluster, pair, θ) single-event trial on the encoded level.
///
/// Sub-trial `k` uses stream `k` of `seed` for its logical state and syndrome sampling.
pub fn single_event_sweep<T: Real>(sim: &ConcatSimulator<T>, thetas: &[f64], seed: u64) -> Result<Vec<TrialReport>> {
    let mut grid = Vec::new();
    for cluster in 1..=MAX_CLUSTERS {
        for (i, j) in qubit_pairs(CLUSTER_SIZE) {
            for &theta in thetas {
                grid.push(ErrorEvent::new(cluster, i, j, theta)?);
            }
        }
    }
    grid.into_par_iter()
        .enumerate()
        .map(|(k, ev)| {
            let mut rng = trial_rng(seed, k);
            let logical = random_logical::<T, _>(&mut rng)?;
            let reference = sim.code().encode(&logical)?;
            let state = sim.apply_exchange_event(&ConcatState::encoded(reference.clone())?, &ev)?;
            let rec = sim.recover(&state, &reference, &mut rng)?;
            Ok(TrialReport {
                trial: k,
                seed,
                events: vec![ev],
                syndromes: vec![rec.syndrome.to_string()],
                fidelity_before: rec.fidelity_before.as_f64(),
                fidelity_after: rec.fidelity_after.as_f64(),
            })
        })
        .collect()
}
