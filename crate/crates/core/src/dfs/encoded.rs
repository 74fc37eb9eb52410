// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use super::DfsBasis;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::operator::SparseOperator;
use crate::scalar::{c, Real, C};

/// Action of an operator restricted to a DFS, in that basis' ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedOperator<T: Real> {
    matrix: DenseMatrix<T>,
}

impl<T: Real> EncodedOperator<T> {
    pub fn new(matrix: DenseMatrix<T>) -> Self {
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix<T> {
        self.matrix
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        Ok(Self { matrix: self.matrix.matmul(&other.matrix)? })
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.matrix.max_abs_diff(&other.matrix)
    }
}

/// `M[r][c] = ⟨v_r| op |v_c⟩`.
pub fn project_operator<T: Real>(op: &SparseOperator<T>, basis: &DfsBasis<T>) -> Result<EncodedOperator<T>> {
    let expected = 1usize << basis.num_qubits();
    if op.dim() != expected {
        return Err(Error::Shape { expected, found: op.dim() });
    }
    let d = basis.dim();
    let mut m = DenseMatrix::zeros(d);
    for (col, v) in basis.vectors().iter().enumerate() {
        let w = op.apply(v)?;
        for (row, u) in basis.vectors().iter().enumerate() {
            m.set(row, col, u.inner(&w)?);
        }
    }
    Ok(EncodedOperator::new(m))
}

/// Coefficients of a 2×2 encoded operator in the basis {I, X̄, Ȳ, Z̄}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoefficients<T: Real> {
    pub identity: C<T>,
    pub x: C<T>,
    pub y: C<T>,
    pub z: C<T>,
}

impl<T: Real> PauliCoefficients<T> {
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        let terms = [
            (self.identity, DenseMatrix::identity(2)),
            (self.x, DenseMatrix::pauli_x()),
            (self.y, DenseMatrix::pauli_y()),
            (self.z, DenseMatrix::pauli_z()),
        ];
        terms.into_iter().fold(DenseMatrix::zeros(2), |acc, (k, p)| acc.add(&p.scale(k)).expect("2x2"))
    }

    pub fn as_array(&self) -> [C<T>; 4] {
        [self.identity, self.x, self.y, self.z]
    }
}

/// Decomposes `enc` (d = 2) via `c_P = tr(P M)/2`.
pub fn encoded_pauli_decomposition<T: Real>(enc: &EncodedOperator<T>) -> Result<PauliCoefficients<T>> {
    if enc.dim() != 2 {
        return Err(Error::UnsupportedDimension(enc.dim()));
    }
    let half = c(T::lit(0.5), T::zero());
    let coeff = |p: DenseMatrix<T>| p.matmul(enc.matrix()).map(|pm| pm.trace() * half);
    Ok(PauliCoefficients {
        identity: coeff(DenseMatrix::identity(2))?,
        x: coeff(DenseMatrix::pauli_x())?,
        y: coeff(DenseMatrix::pauli_y())?,
        z: coeff(DenseMatrix::pauli_z())?,
    })
}
