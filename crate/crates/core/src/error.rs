// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit index {site} out of range for a {num_qubits}-qubit register (indices are 1-based)")]
    QubitIndex { site: usize, num_qubits: usize },

    #[error("exchange needs two distinct qubits, got ({0}, {0})")]
    InvalidPair(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("register size must be at least 1")]
    EmptyRegister,

    #[error("no singlets exist for an odd register size K = {0}")]
    NoSinglet(usize),

    #[error("register size K = {k} exceeds the supported maximum of {max}")]
    TooLarge { k: usize, max: usize },

    #[error("spin S = {twice_spin}/2 is incompatible with K = {k}")]
    SpinDomain { k: u32, twice_spin: u32 },

    #[error("invalid Young diagram: {0}")]
    YoungDiagram(String),

    #[error("unsupported encoded dimension {0} (only d = 2 has a Pauli decomposition)")]
    UnsupportedDimension(usize),

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("inconsistent state: {0}")]
    InconsistentState(String),

    #[error("physical state leaks out of the decoherence-free subspace (leakage {leakage:.3e} > {threshold:.3e})")]
    DfsViolation { leakage: f64, threshold: f64 },

    #[error("invalid exchange model: {0}")]
    Model(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid basis: {0}")]
    Basis(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
