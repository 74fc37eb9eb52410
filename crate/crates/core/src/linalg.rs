// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Small dense linear algebra: a real symmetric eigensolver and complex square matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{c, cone, czero, Real, C};

/// Eigen-decomposition of a real symmetric matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    /// Column-major: eigenvector `k` occupies `vectors[k*n..(k+1)*n]`.
    pub vectors: Vec<T>,
    pub dim: usize,
}

impl<T: Real> SymmetricEigen<T> {
    pub fn vector(&self, k: usize) -> &[T] {
        &self.vectors[k * self.dim..(k + 1) * self.dim]
    }
}

/// Cyclic Jacobi diagonalisation of the row-major symmetric matrix `a` (n×n).
///
/// Only the upper triangle's symmetry is assumed, not checked.
pub fn symmetric_eigen<T: Real>(a: &[T], n: usize) -> SymmetricEigen<T> {
    assert_eq!(a.len(), n * n, "matrix storage does not match dimension");
    let mut m = a.to_vec();
    // v is stored column-major so each eigenvector is contiguous.
    let mut v = vec![T::zero(); n * n];
    for k in 0..n {
        v[k * n + k] = T::one();
    }
    let frob = m.iter().fold(T::zero(), |acc, x| acc + *x * *x).sqrt();
    let tiny = T::min_positive_value();

    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                off += m[p * n + q] * m[p * n + q];
            }
        }
        if off.sqrt() <= T::epsilon() * T::lit(0.01) * frob || off <= tiny {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() <= tiny {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (apq + apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let cs = (t * t + T::one()).sqrt().recip();
                let sn = t * cs;
                for k in 0..n {
                    let (akp, akq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = cs * akp - sn * akq;
                    m[k * n + q] = sn * akp + cs * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = cs * apk - sn * aqk;
                    m[q * n + k] = sn * apk + cs * aqk;
                }
                m[p * n + q] = T::zero();
                m[q * n + p] = T::zero();
                for k in 0..n {
                    let (vkp, vkq) = (v[p * n + k], v[q * n + k]);
                    v[p * n + k] = cs * vkp - sn * vkq;
                    v[q * n + k] = sn * vkp + cs * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| m[i * n + i]).collect();
    let vectors = order.iter().flat_map(|&i| v[i * n..(i + 1) * n].iter().copied()).collect();
    SymmetricEigen { values, vectors, dim: n }
}

/// Dense complex square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T: Real> {
    dim: usize,
    data: Vec<C<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![czero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.data[k * dim + k] = cone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C<T>>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Shape { expected: dim, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    /// From real entries given row by row.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Shape { expected: dim * dim, found: entries.len() });
        }
        Ok(Self { dim, data: entries.iter().map(|&x| c(T::lit(x), T::zero())).collect() })
    }

    pub fn pauli_x() -> Self {
        Self::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    pub fn pauli_y() -> Self {
        Self { dim: 2, data: vec![czero(), c(T::zero(), -T::one()), c(T::zero(), T::one()), czero()] }
    }

    pub fn pauli_z() -> Self {
        Self::from_real(2, &[1.0, 0.0, 0.0, -1.0]).unwrap()
    }

    /// Counter-clockwise rotation `[[cos, −sin], [sin, cos]]`.
    pub fn rotation(theta: T) -> Self {
        let (s, co) = theta.sin_cos();
        Self { dim: 2, data: vec![c(co, T::zero()), c(-s, T::zero()), c(s, T::zero()), c(co, T::zero())] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C<T> {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C<T>) {
        self.data[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<C<T>>> {
        self.data.chunks(self.dim).map(<[C<T>]>::to_vec).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Shape { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                for col in 0..n {
                    out.data[r * n + col] += a * other.data[k * n + col];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, factor: C<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|a| a * factor).collect() }
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for col in 0..n {
                out.data[col * n + r] = self.data[r * n + col].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C<T> {
        (0..self.dim).fold(czero(), |acc, k| acc + self.data[k * self.dim + k])
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, a| m.max(a.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        Ok(self.sub(other)?.max_abs())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.max_abs_diff(&self.adjoint()).map(|d| d <= tol).unwrap_or(false)
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.adjoint()
            .matmul(self)
            .and_then(|p| p.max_abs_diff(&Self::identity(self.dim)))
            .map(|d| d <= tol)
            .unwrap_or(false)
    }
}

impl<T: Real> fmt::Display for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|z| format!("{:+.6}{:+.6}i", z.re, z.im)).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_two_by_two() {
        let e = symmetric_eigen(&[2.0f64, 1.0, 1.0, 2.0], 2);
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
        let v = e.vector(0);
        assert!((v[0] + v[1]).abs() < 1e-14);
    }

    #[test]
    fn jacobi_reconstructs() {
        let n = 7;
        let a: Vec<f64> = (0..n * n)
            .map(|k| {
                let (r, col) = (k / n, k % n);
                ((r.min(col) * 7 + r.max(col) * 3) as f64).sin()
            })
            .collect();
        let e = symmetric_eigen(&a, n);
        for r in 0..n {
            for col in 0..n {
                let s: f64 = (0..n).map(|k| e.values[k] * e.vector(k)[r] * e.vector(k)[col]).sum();
                assert!((s - a[r * n + col]).abs() < 1e-12);
            }
        }
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn pauli_algebra() {
        let (x, y, z) = (DenseMatrix::<f64>::pauli_x(), DenseMatrix::pauli_y(), DenseMatrix::pauli_z());
        // X·Z = −iY
        let xz = x.matmul(&z).unwrap();
        assert!(xz.max_abs_diff(&y.scale(c(0.0, -1.0))).unwrap() < 1e-15);
        assert!(y.is_hermitian(0.0) && y.is_unitary(1e-15));
    }
}
