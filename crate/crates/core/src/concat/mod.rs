// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Concatenated scheme: five four-qubit DFS clusters carrying a five-qubit code.
//!
//! Each cluster of four physical qubits holds one encoded qubit in its
//! singlet space. Exchange inside a cluster acts on that encoded qubit as a
//! 2×2 unitary, which the outer five-qubit code treats as a single-slot error.
//! States can be held at the encoded level (5 abstract qubits) or at the
//! physical level (4 qubits per cluster, up to 2^20 amplitudes); the physical
//! level is the oracle that keeps the encoded shortcut honest.

mod monte_carlo;

pub use monte_carlo::{
    single_event_sweep, Aggregate, ErrorRateModel, MonteCarloConfig, MonteCarloReport, ThetaModel, TrialReport,
    SCHEMA_VERSION,
};

use serde::{Deserialize, Serialize};

use crate::dfs::{dfs_basis, project_operator};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::operator::{
    apply_exchange_unitary_in_place, check_pair, exchange_operator, qubit_pairs, Pauli, SparseOperator, StateVector,
};
use crate::qecc::{StabilizerCode, Syndrome, CODE_LENGTH};
use crate::scalar::{c, czero, Real, C};

/// Physical qubits per cluster.
pub const CLUSTER_SIZE: usize = 4;
/// Clusters in the full concatenated code.
pub const MAX_CLUSTERS: usize = CODE_LENGTH;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Encoded,
    Physical,
}

/// A register of `n_clusters` DFS clusters, held at one of two levels.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcatState<T: Real> {
    level: Level,
    n_clusters: usize,
    state: StateVector<T>,
}

impl<T: Real> ConcatState<T> {
    pub fn encoded(state: StateVector<T>) -> Result<Self> {
        let n = state.num_qubits();
        check_clusters(n)?;
        Ok(Self { level: Level::Encoded, n_clusters: n, state })
    }

    pub fn physical(state: StateVector<T>) -> Result<Self> {
        let q = state.num_qubits();
        if !q.is_multiple_of(CLUSTER_SIZE) {
            return Err(Error::Shape { expected: CLUSTER_SIZE * (q / CLUSTER_SIZE + 1), found: q });
        }
        check_clusters(q / CLUSTER_SIZE)?;
        Ok(Self { level: Level::Physical, n_clusters: q / CLUSTER_SIZE, state })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn n_clusters(&self) -> usize {
        self.n_clusters
    }

    pub fn state(&self) -> &StateVector<T> {
        &self.state
    }

    pub fn into_state(self) -> StateVector<T> {
        self.state
    }
}

fn check_clusters(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyRegister);
    }
    if n > MAX_CLUSTERS {
        return Err(Error::TooLarge { k: n, max: MAX_CLUSTERS });
    }
    Ok(())
}

/// Exchange error `exp(−iθ E_ij)` on qubits `i < j` of one cluster, `θ = J_ij·t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorEvent {
    pub cluster: usize,
    pub pair: (usize, usize),
    pub theta: f64,
}

impl ErrorEvent {
    pub fn new(cluster: usize, i: usize, j: usize, theta: f64) -> Result<Self> {
        if cluster == 0 || cluster > MAX_CLUSTERS {
            return Err(Error::QubitIndex { site: cluster, num_qubits: MAX_CLUSTERS });
        }
        if i >= j {
            return Err(if i == j {
                Error::InvalidPair(i)
            } else {
                Error::Config(format!("pair ({i}, {j}) must have i < j"))
            });
        }
        check_pair(CLUSTER_SIZE, i, j)?;
        if !theta.is_finite() {
            return Err(Error::Config("event angle must be finite".into()));
        }
        Ok(Self { cluster, pair: (i, j), theta })
    }
}

/// Position of pair `(i, j)` in the lexicographic list of the six cluster pairs.
pub fn pair_index(pair: (usize, usize)) -> usize {
    qubit_pairs(CLUSTER_SIZE).position(|p| p == pair).expect("valid cluster pair")
}

/// Result of one recovery round.
#[derive(Debug, Clone, PartialEq)]
pub struct Recovery<T: Real> {
    pub state: ConcatState<T>,
    pub syndrome: Syndrome,
    pub fidelity_before: T,
    pub fidelity_after: T,
}

/// Holds the K = 4 DFS, its encoded exchange matrices and the outer code.
#[derive(Debug, Clone)]
pub struct ConcatSimulator<T: Real> {
    code: StabilizerCode<T>,
    /// Nonzero amplitudes `(index, value)` of `|0̃⟩` and `|1̃⟩`.
    logical_support: [Vec<(usize, C<T>)>; 2],
    /// Encoded `E_ij` for the six pairs, lexicographic order.
    encoded_exchange: Vec<DenseMatrix<T>>,
    leakage_threshold: T,
}

impl<T: Real> ConcatSimulator<T> {
    pub fn new() -> Result<Self> {
        let basis = dfs_basis::<T>(CLUSTER_SIZE)?;
        let support = |v: &StateVector<T>| -> Vec<(usize, C<T>)> {
            v.amplitudes().iter().copied().enumerate().filter(|(_, a)| *a != czero()).collect()
        };
        let logical_support = [support(&basis.vectors()[0]), support(&basis.vectors()[1])];
        let encoded_exchange = qubit_pairs(CLUSTER_SIZE)
            .map(|(i, j)| Ok(project_operator(&exchange_operator::<T>(CLUSTER_SIZE, i, j)?, &basis)?.into_matrix()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            code: StabilizerCode::perfect(),
            logical_support,
            encoded_exchange,
            leakage_threshold: T::lit(T::CHAINED_TOL),
        })
    }

    pub fn code(&self) -> &StabilizerCode<T> {
        &self.code
    }

    pub fn with_leakage_threshold(mut self, threshold: T) -> Self {
        self.leakage_threshold = threshold;
        self
    }

    /// Encoded 2×2 matrix of `E_ij` on one cluster.
    pub fn encoded_exchange(&self, pair: (usize, usize)) -> &DenseMatrix<T> {
        &self.encoded_exchange[pair_index(pair)]
    }

    /// `cos θ · I − i sin θ · Ē_ij`.
    pub fn encoded_event_unitary(&self, pair: (usize, usize), theta: T) -> DenseMatrix<T> {
        let e = self.encoded_exchange(pair);
        DenseMatrix::identity(2)
            .scale(c(theta.cos(), T::zero()))
            .add(&e.scale(c(T::zero(), -theta.sin())))
            .expect("2x2")
    }

    /// Maps each encoded qubit through `|0⟩ → |0̃⟩`, `|1⟩ → |1̃⟩`.
    pub fn lift_encoded_to_physical(&self, encoded: &StateVector<T>) -> Result<StateVector<T>> {
        let n = encoded.num_qubits();
        check_clusters(n)?;
        let mut out = StateVector::zero(CLUSTER_SIZE * n)?;
        let amps = out.amplitudes_mut();
        for (e, &a) in encoded.amplitudes().iter().enumerate() {
            if a == czero() {
                continue;
            }
            self.for_each_product(e, n, |idx, w| amps[idx] += a * w);
        }
        Ok(out)
    }

    /// Visits every `(physical index, product amplitude)` of the tensor state
    /// labelled by encoded index `e`.
    fn for_each_product(&self, e: usize, n: usize, mut f: impl FnMut(usize, C<T>)) {
        fn rec<T: Real>(
            sim: &ConcatSimulator<T>,
            e: usize,
            n: usize,
            cluster: usize,
            idx: usize,
            amp: C<T>,
            f: &mut impl FnMut(usize, C<T>),
        ) {
            if cluster == n {
                f(idx, amp);
                return;
            }
            let bit = (e >> (n - 1 - cluster)) & 1;
            for &(x, v) in &sim.logical_support[bit] {
                rec(sim, e, n, cluster + 1, (idx << CLUSTER_SIZE) | x, amp * v, f);
            }
        }
        rec(self, e, n, 0, 0, C::new(T::one(), T::zero()), &mut f);
    }

    /// Coordinates in the product DFS basis, and the norm of what lies outside it.
    pub fn project_physical_to_encoded(&self, physical: &StateVector<T>) -> Result<(StateVector<T>, T)> {
        let q = physical.num_qubits();
        if !q.is_multiple_of(CLUSTER_SIZE) {
            return Err(Error::Shape { expected: CLUSTER_SIZE * (q / CLUSTER_SIZE + 1), found: q });
        }
        let n = q / CLUSTER_SIZE;
        check_clusters(n)?;
        let psi = physical.amplitudes();
        let mut enc = vec![czero(); 1 << n];
        for (e, slot) in enc.iter_mut().enumerate() {
            let mut acc = czero();
            self.for_each_product(e, n, |idx, w| acc += w.conj() * psi[idx]);
            *slot = acc;
        }
        let enc = StateVector::new(n, enc)?;
        let back = self.lift_encoded_to_physical(&enc)?;
        let leakage = physical.add_scaled(c(-T::one(), T::zero()), &back)?.norm();
        Ok((enc, leakage))
    }

    pub fn to_encoded(&self, state: &ConcatState<T>) -> Result<(StateVector<T>, T)> {
        match state.level {
            Level::Encoded => Ok((state.state.clone(), T::zero())),
            Level::Physical => self.project_physical_to_encoded(&state.state),
        }
    }

    pub fn to_physical(&self, state: &ConcatState<T>) -> Result<ConcatState<T>> {
        match state.level {
            Level::Physical => Ok(state.clone()),
            Level::Encoded => ConcatState::physical(self.lift_encoded_to_physical(&state.state)?),
        }
    }

    /// Applies an exchange event at whichever level `state` is held.
    pub fn apply_exchange_event(&self, state: &ConcatState<T>, event: &ErrorEvent) -> Result<ConcatState<T>> {
        if event.cluster > state.n_clusters {
            return Err(Error::QubitIndex { site: event.cluster, num_qubits: state.n_clusters });
        }
        let theta = T::lit(event.theta);
        let mut out = state.clone();
        match state.level {
            Level::Encoded => {
                let u = self.encoded_event_unitary(event.pair, theta);
                apply_single_slot(&mut out.state, event.cluster, &u);
            }
            Level::Physical => {
                let offset = CLUSTER_SIZE * (event.cluster - 1);
                apply_exchange_unitary_in_place(&mut out.state, offset + event.pair.0, offset + event.pair.1, theta)?;
            }
        }
        Ok(out)
    }

    /// Five-qubit-code syndrome measurement and correction on the encoded slots.
    ///
    /// Physical states are projected to the encoded level first; a leakage
    /// above the threshold is reported as a DFS violation.
    pub fn recover<R: rand::Rng + ?Sized>(
        &self,
        state: &ConcatState<T>,
        reference: &StateVector<T>,
        rng: &mut R,
    ) -> Result<Recovery<T>> {
        let (encoded, leakage) = self.to_encoded(state)?;
        if leakage > self.leakage_threshold {
            return Err(Error::DfsViolation { leakage: leakage.as_f64(), threshold: self.leakage_threshold.as_f64() });
        }
        if encoded.num_qubits() != CODE_LENGTH {
            return Err(Error::Shape { expected: 1 << CODE_LENGTH, found: encoded.dim() });
        }
        let fidelity_before = reference.fidelity(&encoded)?.min(T::one());
        let (syndrome, measured) = self.code.measure_syndrome(&encoded, rng)?;
        let corrected = self.code.correct(&measured, syndrome)?;
        let fidelity_after = reference.fidelity(&corrected)?.min(T::one());
        Ok(Recovery { state: ConcatState::encoded(corrected)?, syndrome, fidelity_before, fidelity_after })
    }

    /// Encoded Pauli on `cluster` realised with that cluster's physical exchange operators:
    /// `Z̄ = −E_12`, `X̄ = (E_12 + 2E_13)/√3`, `Ȳ = iX̄Z̄`.
    ///
    /// Acts as the encoded Pauli on the DFS; outside the DFS it is not a Pauli.
    pub fn lifted_encoded_pauli(&self, pauli: Pauli, cluster: usize, n_clusters: usize) -> Result<SparseOperator<T>> {
        check_clusters(n_clusters)?;
        if cluster == 0 || cluster > n_clusters {
            return Err(Error::QubitIndex { site: cluster, num_qubits: n_clusters });
        }
        let q = CLUSTER_SIZE * n_clusters;
        let off = CLUSTER_SIZE * (cluster - 1);
        let e12 = exchange_operator::<T>(q, off + 1, off + 2)?;
        let e13 = exchange_operator::<T>(q, off + 1, off + 3)?;
        let z = e12.scale_real(-T::one());
        let x = e12.add(&e13.scale_real(T::lit(2.0)))?.scale_real(T::lit(3.0).sqrt().recip());
        match pauli {
            Pauli::I => SparseOperator::identity(q),
            Pauli::Z => Ok(z),
            Pauli::X => Ok(x),
            Pauli::Y => Ok(x.matmul(&z)?.scale(c(T::zero(), T::one()))),
        }
    }
}

/// Applies a 2×2 unitary to the 1-based `slot` of an encoded register.
fn apply_single_slot<T: Real>(state: &mut StateVector<T>, slot: usize, u: &DenseMatrix<T>) {
    let n = state.num_qubits();
    let mask = 1usize << (n - slot);
    let (u00, u01, u10, u11) = (u.get(0, 0), u.get(0, 1), u.get(1, 0), u.get(1, 1));
    let amps = state.amplitudes_mut();
    for x in 0..amps.len() {
        if x & mask == 0 {
            let y = x | mask;
            let (a, b) = (amps[x], amps[y]);
            amps[x] = u00 * a + u01 * b;
            amps[y] = u10 * a + u11 * b;
        }
    }
}
