// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Decoherence-free subspaces for collective decoherence and their behaviour
//! under exchange errors.
//!
//! * [`operator`]: sparse Pauli, exchange and total-spin operators on K-qubit registers;
//! * [`dfs`]: singlet bases, invariance checks and encoded exchange matrices;
//! * [`combinatorics`]: exact multiplet and standard-tableaux counts;
//! * [`qecc`]: the five-qubit perfect code;
//! * [`concat`]: the 20-qubit concatenated DFS + five-qubit-code simulator.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix it to `f64`.

pub mod combinatorics;
pub mod concat;
pub mod dfs;
pub mod error;
pub mod linalg;
pub mod operator;
pub mod qecc;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub type SparseOperator = operator::SparseOperator<f64>;
pub type StateVector = operator::StateVector<f64>;
pub type ExchangeModel = operator::ExchangeModel<f64>;
pub type DfsBasis = dfs::DfsBasis<f64>;
pub type EncodedOperator = dfs::EncodedOperator<f64>;
pub type StabilizerCode = qecc::StabilizerCode<f64>;
pub type ConcatSimulator = concat::ConcatSimulator<f64>;
pub type ConcatState = concat::ConcatState<f64>;

pub type SparseOperatorF32 = operator::SparseOperator<f32>;
pub type StateVectorF32 = operator::StateVector<f32>;
pub type DfsBasisF32 = dfs::DfsBasis<f32>;
