// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use super::StateVector;
use crate::error::{Error, Result};
use crate::scalar::{czero, Real, C};

/// Rows longer than this many amplitudes are applied in parallel.
const PAR_APPLY_MIN_DIM: usize = 1 << 14;

/// Complex sparse operator on a `2^K`-dimensional register, stored in
/// compressed-row form.
///
/// Column indices are sorted within each row and exact zeros are dropped, so
/// two operators holding the same matrix have identical storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator<T: Real> {
    num_qubits: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<C<T>>,
}

impl<T: Real> SparseOperator<T> {
    /// Builds from `(row, col, value)` triplets. Duplicates are summed.
    pub fn from_triplets<I>(num_qubits: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, C<T>)>,
    {
        if num_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        let dim = 1usize << num_qubits;
        let mut entries: Vec<(usize, usize, C<T>)> = triplets.into_iter().collect();
        for &(r, c, _) in &entries {
            if r >= dim || c >= dim {
                return Err(Error::Shape { expected: dim, found: r.max(c) });
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));

        let mut row_ptr = vec![0usize; dim + 1];
        let mut cols = Vec::with_capacity(entries.len());
        let mut vals: Vec<C<T>> = Vec::with_capacity(entries.len());
        let mut rows = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            if let (Some(&lr), Some(&lc)) = (rows.last(), cols.last()) {
                if lr == r && lc == c {
                    *vals.last_mut().unwrap() += v;
                    continue;
                }
            }
            rows.push(r);
            cols.push(c);
            vals.push(v);
        }
        let mut keep_cols = Vec::with_capacity(cols.len());
        let mut keep_vals = Vec::with_capacity(vals.len());
        for ((r, c), v) in rows.into_iter().zip(cols).zip(vals) {
            if v.re == T::zero() && v.im == T::zero() {
                continue;
            }
            row_ptr[r + 1] += 1;
            keep_cols.push(c);
            keep_vals.push(v);
        }
        for r in 0..dim {
            row_ptr[r + 1] += row_ptr[r];
        }
        Ok(Self { num_qubits, row_ptr, cols: keep_cols, vals: keep_vals })
    }

    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::from_triplets(num_qubits, std::iter::empty())
    }

    pub fn identity(num_qubits: usize) -> Result<Self> {
        Self::scaled_identity(num_qubits, C::new(T::one(), T::zero()))
    }

    pub fn scaled_identity(num_qubits: usize, value: C<T>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        Self::from_triplets(num_qubits, (0..1usize << num_qubits).map(|x| (x, x, value)))
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.row_ptr.len() - 1
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// Entry `(row, col)`, zero if not stored.
    pub fn get(&self, row: usize, col: usize) -> C<T> {
        if row >= self.dim() {
            return czero();
        }
        let (cols, vals) = self.row(row);
        match cols.binary_search(&col) {
            Ok(k) => vals[k],
            Err(_) => czero(),
        }
    }

    #[inline]
    pub fn row(&self, row: usize) -> (&[usize], &[C<T>]) {
        let span = self.row_ptr[row]..self.row_ptr[row + 1];
        (&self.cols[span.clone()], &self.vals[span])
    }

    /// Stored entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, C<T>)> + '_ {
        (0..self.dim()).flat_map(move |r| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals).map(move |(&c, &v)| (r, c, v))
        })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Shape { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn scale(&self, factor: C<T>) -> Self {
        Self::from_triplets(self.num_qubits, self.iter().map(|(r, c, v)| (r, c, v * factor)))
            .expect("indices unchanged")
    }

    pub fn scale_real(&self, factor: T) -> Self {
        self.scale(C::new(factor, T::zero()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Self::from_triplets(self.num_qubits, self.iter().chain(other.iter()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Self::from_triplets(self.num_qubits, self.iter().chain(other.iter().map(|(r, c, v)| (r, c, -v))))
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let dim = self.dim();
        let mut acc = vec![czero::<T>(); dim];
        let mut touched = vec![false; dim];
        let mut pattern = Vec::new();
        let mut triplets = Vec::new();
        for r in 0..dim {
            let (cols, vals) = self.row(r);
            for (&k, &a) in cols.iter().zip(vals) {
                let (ocols, ovals) = other.row(k);
                for (&c, &b) in ocols.iter().zip(ovals) {
                    if !touched[c] {
                        touched[c] = true;
                        pattern.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            for &c in &pattern {
                triplets.push((r, c, acc[c]));
                acc[c] = czero();
                touched[c] = false;
            }
            pattern.clear();
        }
        Self::from_triplets(self.num_qubits, triplets)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_triplets(self.num_qubits, self.iter().map(|(r, c, v)| (c, r, v.conj()))).expect("indices unchanged")
    }

    pub fn trace(&self) -> C<T> {
        (0..self.dim()).fold(czero(), |acc, r| acc + self.get(r, r))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.vals.iter().fold(T::zero(), |m, v| m.max(v.norm()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.vals.iter().fold(T::zero(), |acc, v| acc + v.norm_sqr()).sqrt()
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        Ok(self.sub(other)?.max_abs())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.iter().all(|(r, c, v)| (v - self.get(c, r).conj()).norm() <= tol)
    }

    /// Matrix-vector product. Does not renormalize.
    pub fn apply(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        if state.dim() != self.dim() {
            return Err(Error::Shape { expected: self.dim(), found: state.dim() });
        }
        let amps = state.amplitudes();
        let row_value = |r: usize| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals).fold(czero::<T>(), |acc, (&c, &v)| acc + v * amps[c])
        };
        let out: Vec<C<T>> = if self.dim() >= PAR_APPLY_MIN_DIM {
            (0..self.dim()).into_par_iter().map(row_value).collect()
        } else {
            (0..self.dim()).map(row_value).collect()
        };
        StateVector::new(self.num_qubits, out)
    }

    /// Dense row-major copy. Intended for small registers.
    pub fn to_dense(&self) -> Vec<Vec<C<T>>> {
        let mut m = vec![vec![czero(); self.dim()]; self.dim()];
        for (r, c, v) in self.iter() {
            m[r][c] = v;
        }
        m
    }
}

/// `AB − BA`.
pub fn commutator<T: Real>(a: &SparseOperator<T>, b: &SparseOperator<T>) -> Result<SparseOperator<T>> {
    a.matmul(b)?.sub(&b.matmul(a)?)
}
