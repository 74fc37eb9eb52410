// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense reference constructions built directly with nalgebra, independent
//! of the crate's sparse kernels.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

use exchange_dfs::SparseOperator;

pub type M = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn to_dense(op: &SparseOperator) -> M {
    let d = op.dim();
    let mut m = M::zeros(d, d);
    for (r, col, v) in op.iter() {
        m[(r, col)] = v;
    }
    m
}

pub fn max_abs(m: &M) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn pauli(p: char) -> M {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match p {
        'I' => M::from_row_slice(2, 2, &[o, z, z, o]),
        'X' => M::from_row_slice(2, 2, &[z, o, o, z]),
        'Y' => M::from_row_slice(2, 2, &[z, -i, i, z]),
        'Z' => M::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => panic!("bad pauli {p}"),
    }
}

/// Kronecker product of single-qubit Paulis, leftmost factor = qubit 1.
pub fn pauli_string(s: &str) -> M {
    s.chars().fold(M::identity(1, 1), |acc, p| acc.kronecker(&pauli(p)))
}

/// `p` on `site` (1-based), identity elsewhere.
pub fn embed(p: char, site: usize, k: usize) -> M {
    let s: String = (1..=k).map(|q| if q == site { p } else { 'I' }).collect();
    pauli_string(&s)
}

/// Permutation matrix swapping qubits `i` and `j`, built from bit manipulation.
pub fn swap(k: usize, i: usize, j: usize) -> M {
    let d = 1usize << k;
    let (bi, bj) = (k - i, k - j);
    let mut m = M::zeros(d, d);
    for x in 0..d {
        let (a, b) = ((x >> bi) & 1, (x >> bj) & 1);
        let y = if a == b { x } else { x ^ (1 << bi) ^ (1 << bj) };
        m[(y, x)] = c(1.0, 0.0);
    }
    m
}

pub fn total_spin(k: usize, p: char) -> M {
    (1..=k).fold(M::zeros(1 << k, 1 << k), |acc, q| acc + embed(p, q, k))
}

pub fn spin_squared(k: usize) -> M {
    ['X', 'Y', 'Z']
        .iter()
        .map(|&p| {
            let s = total_spin(k, p);
            &s * &s
        })
        .fold(M::zeros(1 << k, 1 << k), |a, b| a + b)
}

/// Real symmetric version of a Hermitian matrix with zero imaginary part.
pub fn real_part(m: &M) -> DMatrix<f64> {
    m.map(|z| z.re)
}

/// Number of eigenvalues of the real symmetric `m` with `|λ| < tol`.
pub fn kernel_dim(m: &DMatrix<f64>, tol: f64) -> usize {
    m.clone().symmetric_eigen().eigenvalues.iter().filter(|l| l.abs() < tol).count()
}
