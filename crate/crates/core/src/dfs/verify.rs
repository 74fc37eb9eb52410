// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::{dfs_basis, project_operator, DfsBasis, EncodedOperator};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::operator::{
    commutator, exchange_hamiltonian, exchange_operator, qubit_pairs, total_spin_operator, total_spin_squared, Axis,
    ExchangeModel, SparseOperator,
};
use crate::scalar::{c, Real};

/// Largest register handled by [`verify_constant_j`].
pub const MAX_CONSTANT_J_QUBITS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DfsConditionReport<T> {
    /// `max_{α, v} ‖S_α v‖`.
    pub max_residual: T,
    pub passed: bool,
}

/// Checks `S_α v = 0` for every basis vector and axis.
pub fn check_dfs_condition<T: Real>(basis: &DfsBasis<T>, tol: T) -> Result<DfsConditionReport<T>> {
    let mut worst = T::zero();
    for axis in Axis::ALL {
        let s = total_spin_operator::<T>(basis.num_qubits(), axis)?;
        for v in basis.vectors() {
            worst = worst.max(s.apply(v)?.norm());
        }
    }
    Ok(DfsConditionReport { max_residual: worst, passed: worst < tol })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvarianceReport<T> {
    /// Frobenius norm of `(I − P) op P`.
    pub leakage: T,
    pub invariant: bool,
}

/// Measures how far `op` maps the span of `basis` outside itself.
pub fn check_invariance<T: Real>(op: &SparseOperator<T>, basis: &DfsBasis<T>, tol: T) -> Result<InvarianceReport<T>> {
    let expected = 1usize << basis.num_qubits();
    if op.dim() != expected {
        return Err(Error::Shape { expected, found: op.dim() });
    }
    // ‖(I−P) op P‖_F² = Σ_v ‖(I−P) op v‖² for an orthonormal basis {v}.
    let mut sq = T::zero();
    for v in basis.vectors() {
        let out = basis.leakage(&op.apply(v)?)?;
        sq += out * out;
    }
    let leakage = sq.sqrt();
    Ok(InvarianceReport { leakage, invariant: leakage < tol })
}

/// Worst-case commutator and leakage over every `E_ij` of a K-qubit register.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExchangeInvarianceReport<T> {
    /// `max ‖[S_α, E_ij]‖_F`.
    pub max_commutator: T,
    /// `max ‖(I − P) E_ij P‖_F`.
    pub max_leakage: T,
}

pub fn exchange_invariance<T: Real>(basis: &DfsBasis<T>) -> Result<ExchangeInvarianceReport<T>> {
    let k = basis.num_qubits();
    let spins = Axis::ALL.iter().map(|&a| total_spin_operator::<T>(k, a)).collect::<Result<Vec<_>>>()?;
    let mut report = ExchangeInvarianceReport { max_commutator: T::zero(), max_leakage: T::zero() };
    for (i, j) in qubit_pairs(k) {
        let e = exchange_operator::<T>(k, i, j)?;
        for s in &spins {
            report.max_commutator = report.max_commutator.max(commutator(s, &e)?.frobenius_norm());
        }
        let inv = check_invariance(&e, basis, T::infinity())?;
        report.max_leakage = report.max_leakage.max(inv.leakage);
    }
    Ok(report)
}

/// Outcome of checking the uniform-coupling identity and the DFS phase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantJReport<T> {
    pub num_qubits: usize,
    /// Overall coupling `J`.
    pub coupling: T,
    /// Per-pair coupling `J/K` used to build `H_ex`.
    pub pair_coupling: T,
    /// `ν = (J/K)(K² − 4K)/8`.
    pub nu: T,
    /// Max entrywise `|H_ex − (J/8K)[(K²−4K)I + S²]|`.
    pub identity_residual: T,
    /// `max_v ‖H_ex v − ν v‖` over the DFS basis.
    pub eigen_residual: T,
    pub phase_only: bool,
}

/// `ν = (J/K)(K² − 4K)/8`.
pub fn global_phase_rate<T: Real>(num_qubits: usize, coupling: T) -> T {
    let k = T::lit(num_qubits as f64);
    coupling / k * (k * k - T::lit(4.0) * k) / T::lit(8.0)
}

/// Builds `H_ex` with `J_ij = J/K` and checks it acts as `ν·I` on the DFS.
pub fn verify_constant_j<T: Real>(num_qubits: usize, coupling: T) -> Result<ConstantJReport<T>> {
    let k = num_qubits;
    if k == 0 {
        return Err(Error::EmptyRegister);
    }
    if !k.is_multiple_of(2) {
        return Err(Error::NoSinglet(k));
    }
    if k > MAX_CONSTANT_J_QUBITS {
        return Err(Error::TooLarge { k, max: MAX_CONSTANT_J_QUBITS });
    }
    let kf = T::lit(k as f64);
    let pair_coupling = coupling / kf;
    let h = exchange_hamiltonian(&ExchangeModel::uniform(k, pair_coupling)?)?;

    let shift = SparseOperator::<T>::identity(k)?.scale_real(kf * kf - T::lit(4.0) * kf);
    let rhs = shift.add(&total_spin_squared(k)?)?.scale_real(coupling / (T::lit(8.0) * kf));
    let identity_residual = h.max_abs_diff(&rhs)?;

    let nu = global_phase_rate(k, coupling);
    let basis = dfs_basis::<T>(k)?;
    let mut eigen_residual = T::zero();
    for v in basis.vectors() {
        let hv = h.apply(v)?;
        eigen_residual = eigen_residual.max(hv.add_scaled(c(-nu, T::zero()), v)?.norm());
    }
    let tol = T::lit(T::CHAINED_TOL);
    Ok(ConstantJReport {
        num_qubits: k,
        coupling,
        pair_coupling,
        nu,
        identity_residual,
        eigen_residual,
        phase_only: identity_residual < tol && eigen_residual < tol,
    })
}

/// `R̃(θ) = R(θ)·Z`: reflection about the x-axis followed by a rotation by θ.
pub fn reflection_rotation<T: Real>(theta: T) -> DenseMatrix<T> {
    DenseMatrix::rotation(theta).matmul(&DenseMatrix::pauli_z()).expect("2x2")
}

/// Reference encoded matrix of `E_ij` on the K = 4 DFS:
/// `−Z̄` for {12, 34}, `R̃(π/3)` for {13, 24}, `R̃(−π/3)` for {14, 23}.
pub fn expected_four_qubit_exchange<T: Real>(i: usize, j: usize) -> Result<DenseMatrix<T>> {
    let third = T::PI() / T::lit(3.0);
    match (i.min(j), i.max(j)) {
        (1, 2) | (3, 4) => Ok(DenseMatrix::pauli_z().scale(c(-T::one(), T::zero()))),
        (1, 3) | (2, 4) => Ok(reflection_rotation(third)),
        (1, 4) | (2, 3) => Ok(reflection_rotation(-third)),
        _ => Err(Error::QubitIndex { site: i.max(j), num_qubits: 4 }),
    }
}

/// One row of the K = 4 encoded exchange table.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedExchange<T: Real> {
    pub pair: (usize, usize),
    pub encoded: EncodedOperator<T>,
    /// Max entrywise deviation from [`expected_four_qubit_exchange`].
    pub residual: T,
}

/// Projects all six `E_ij` onto the K = 4 DFS and compares with the reference matrices.
pub fn four_qubit_exchange_table<T: Real>() -> Result<Vec<EncodedExchange<T>>> {
    let basis = dfs_basis::<T>(4)?;
    qubit_pairs(4)
        .map(|(i, j)| {
            let encoded = project_operator(&exchange_operator::<T>(4, i, j)?, &basis)?;
            let residual = encoded.matrix().max_abs_diff(&expected_four_qubit_exchange(i, j)?)?;
            Ok(EncodedExchange { pair: (i, j), encoded, residual })
        })
        .collect()
}
