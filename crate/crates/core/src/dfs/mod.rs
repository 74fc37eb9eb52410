// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Singlet (decoherence-free) subspaces and the action of exchange on them.

mod basis;
mod encoded;
mod verify;

pub use basis::{dfs_basis, four_qubit_logical_states, DfsBasis, MAX_BASIS_QUBITS};
pub use encoded::{encoded_pauli_decomposition, project_operator, EncodedOperator, PauliCoefficients};
pub use verify::{
    check_dfs_condition, check_invariance, exchange_invariance, expected_four_qubit_exchange,
    four_qubit_exchange_table, global_phase_rate, reflection_rotation, verify_constant_j, ConstantJReport,
    DfsConditionReport, EncodedExchange, ExchangeInvarianceReport, InvarianceReport, MAX_CONSTANT_J_QUBITS,
};
