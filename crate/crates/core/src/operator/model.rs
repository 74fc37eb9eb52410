// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric, zero-diagonal matrix of exchange couplings `J_ij` (ħ = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeModel<T: Real> {
    num_qubits: usize,
    couplings: Vec<T>,
}

/// On-disk form: `{"num_qubits": K, "couplings": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    num_qubits: usize,
    couplings: Vec<Vec<f64>>,
}

impl<T: Real> ExchangeModel<T> {
    pub fn zeros(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        Ok(Self { num_qubits, couplings: vec![T::zero(); num_qubits * num_qubits] })
    }

    /// `J_ij = coupling` for every pair.
    pub fn uniform(num_qubits: usize, coupling: T) -> Result<Self> {
        let mut m = Self::zeros(num_qubits)?;
        for i in 0..num_qubits {
            for j in 0..num_qubits {
                if i != j {
                    m.couplings[i * num_qubits + j] = coupling;
                }
            }
        }
        Ok(m)
    }

    /// Validates symmetry and a zero diagonal exactly.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::EmptyRegister);
        }
        let mut couplings = Vec::with_capacity(k * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Model(format!("row {} has {} entries, expected {k}", i + 1, row.len())));
            }
            couplings.extend_from_slice(row);
        }
        for i in 0..k {
            if couplings[i * k + i] != T::zero() {
                return Err(Error::Model(format!("diagonal entry J_{0}{0} is nonzero", i + 1)));
            }
            for j in 0..k {
                let v = couplings[i * k + j];
                if !v.is_finite() {
                    return Err(Error::Model(format!("J_{}{} is not finite", i + 1, j + 1)));
                }
                if v != couplings[j * k + i] {
                    return Err(Error::Model(format!("J_{0}{1} != J_{1}{0}", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { num_qubits: k, couplings })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// `J_ij` for 1-based qubits.
    pub fn coupling(&self, i: usize, j: usize) -> T {
        self.couplings[(i - 1) * self.num_qubits + (j - 1)]
    }

    /// Sets `J_ij = J_ji = value`.
    pub fn set_coupling(&mut self, i: usize, j: usize, value: T) -> Result<()> {
        let (i, j) = super::check_pair(self.num_qubits, i, j)?;
        if !value.is_finite() {
            return Err(Error::Model("coupling must be finite".into()));
        }
        let k = self.num_qubits;
        self.couplings[(i - 1) * k + (j - 1)] = value;
        self.couplings[(j - 1) * k + (i - 1)] = value;
        Ok(())
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.couplings.chunks(self.num_qubits).map(<[T]>::to_vec).collect()
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::Model(e.to_string()))?;
        if file.couplings.len() != file.num_qubits {
            return Err(Error::Model(format!(
                "num_qubits is {} but couplings has {} rows",
                file.num_qubits,
                file.couplings.len()
            )));
        }
        let rows = file.couplings.into_iter().map(|r| r.into_iter().map(T::lit).collect()).collect::<Vec<Vec<T>>>();
        // Validation happens again after conversion; f64 -> f32 rounding is symmetric.
        Self::from_rows(rows)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Model(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        let file = ModelFile {
            num_qubits: self.num_qubits,
            couplings: self.rows().into_iter().map(|r| r.into_iter().map(Real::as_f64).collect()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }
}
