// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Sparse operators against dense Kronecker-product references.

mod common;

use common::*;
use exchange_dfs::operator::{
    exchange_hamiltonian, exchange_operator, exchange_unitary, heisenberg_exchange, qubit_pairs, total_spin_operator,
    total_spin_squared, Axis,
};
use exchange_dfs::{ExchangeModel, StateVector};

fn axis_char(a: Axis) -> char {
    match a {
        Axis::X => 'X',
        Axis::Y => 'Y',
        Axis::Z => 'Z',
    }
}

#[test]
fn exchange_matches_bit_swap_permutation() {
    for k in 2..=6 {
        for (i, j) in qubit_pairs(k) {
            let e = to_dense(&exchange_operator::<f64>(k, i, j).unwrap());
            assert_eq!(e, swap(k, i, j), "K={k} ({i},{j})");
        }
    }
}

#[test]
fn heisenberg_form_matches_kronecker_reference() {
    for k in 2..=6 {
        let id = M::identity(1 << k, 1 << k);
        for (i, j) in qubit_pairs(k) {
            let mut dots = id.clone();
            for p in ['X', 'Y', 'Z'] {
                dots += embed(p, i, k) * embed(p, j, k);
            }
            let reference = dots * c(0.5, 0.0);
            let ours = to_dense(&heisenberg_exchange::<f64>(k, i, j).unwrap());
            assert!(max_abs(&(ours - &reference)) < 1e-14);
            assert!(max_abs(&(reference - swap(k, i, j))) < 1e-14);
        }
    }
}

#[test]
fn total_spin_and_square_match_kronecker_reference() {
    for k in 1..=5 {
        for a in Axis::ALL {
            let ours = to_dense(&total_spin_operator::<f64>(k, a).unwrap());
            assert!(max_abs(&(ours - total_spin(k, axis_char(a)))) < 1e-14);
        }
        let s2 = to_dense(&total_spin_squared::<f64>(k).unwrap());
        assert!(max_abs(&(s2 - spin_squared(k))) < 1e-12);
    }
}

#[test]
fn spin_squared_identity_k3() {
    // S² = 3K·I + 2 Σ_{i<j} σ_i·σ_j
    let k = 3;
    let mut rhs = M::identity(8, 8) * c(3.0 * k as f64, 0.0);
    for (i, j) in qubit_pairs(k) {
        for p in ['X', 'Y', 'Z'] {
            rhs += embed(p, i, k) * embed(p, j, k) * c(2.0, 0.0);
        }
    }
    let s2 = to_dense(&total_spin_squared::<f64>(k).unwrap());
    assert!(max_abs(&(s2 - rhs)) < 1e-12);
}

#[test]
fn spin_squared_single_qubit_eigenvalue_three() {
    let eig = real_part(&spin_squared(1)).symmetric_eigen();
    for l in eig.eigenvalues.iter() {
        assert!((l - 3.0).abs() < 1e-12);
    }
    let ours = to_dense(&total_spin_squared::<f64>(1).unwrap());
    assert!(max_abs(&(ours - M::identity(2, 2) * c(3.0, 0.0))) < 1e-14);
}

#[test]
fn four_qubit_spin_two_multiplet_count() {
    // S(S+1) scaled by 4: spin 2 ↔ eigenvalue 24; one quintuplet → 5 eigenvalues.
    let eig = real_part(&spin_squared(4)).symmetric_eigen();
    let n = eig.eigenvalues.iter().filter(|l| (*l - 24.0).abs() < 1e-9).count();
    assert_eq!(n / 5, 1);
}

#[test]
fn unitary_matches_matrix_exponential() {
    let theta = 0.7;
    for (i, j) in qubit_pairs(4) {
        let e = swap(4, i, j);
        let reference = (e * c(0.0, -theta)).exp();
        let ours = to_dense(&exchange_unitary::<f64>(4, i, j, theta).unwrap());
        assert!(max_abs(&(ours - reference)) < 1e-12, "({i},{j})");
    }
}

#[test]
fn unitary_matches_eigendecomposition() {
    // E is real symmetric: exp(−iθE) = V diag(e^{−iθλ}) Vᵀ.
    let theta = 0.7;
    let e = swap(4, 2, 4);
    let eig = real_part(&e).symmetric_eigen();
    let v = eig.eigenvectors.map(|x| c(x, 0.0));
    let d = M::from_diagonal(&eig.eigenvalues.map(|l| c((theta * l).cos(), -(theta * l).sin())));
    let reference = &v * d * v.transpose();
    let ours = to_dense(&exchange_unitary::<f64>(4, 2, 4, theta).unwrap());
    assert!(max_abs(&(ours - reference)) < 1e-12);
}

#[test]
fn hamiltonian_is_half_unordered_pair_sum() {
    let rows = vec![
        vec![0.0, 0.3, -1.1, 0.25],
        vec![0.3, 0.0, 0.7, 2.0],
        vec![-1.1, 0.7, 0.0, -0.4],
        vec![0.25, 2.0, -0.4, 0.0],
    ];
    let model = ExchangeModel::from_rows(rows.clone()).unwrap();
    let mut reference = M::zeros(16, 16);
    for (i, j) in qubit_pairs(4) {
        reference += swap(4, i, j) * c(0.5 * rows[i - 1][j - 1], 0.0);
    }
    let ours = to_dense(&exchange_hamiltonian(&model).unwrap());
    assert!(max_abs(&(ours - reference)) < 1e-14);
}

#[test]
fn two_qubit_singlet_phase_from_dense_diagonalization() {
    // J = 1, K = 2 → J_12 = 1/2; the singlet eigenvalue of H_ex is ν = −1/4.
    let model = ExchangeModel::uniform(2, 0.5).unwrap();
    let h = real_part(&to_dense(&exchange_hamiltonian(&model).unwrap()));
    let eig = h.clone().symmetric_eigen();
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    assert!((values[0] + 0.25).abs() < 1e-12);
    assert!(values[1..].iter().all(|l| (l - 0.25).abs() < 1e-12));

    let s = 0.5f64.sqrt();
    let singlet = StateVector::new(2, vec![c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)]).unwrap();
    let hs = exchange_hamiltonian(&model).unwrap().apply(&singlet).unwrap();
    assert!(hs.max_abs_diff(&singlet.scaled(c(-0.25, 0.0))).unwrap() < 1e-14);
}

#[test]
fn su2_commutators_dense() {
    for k in 1..=4 {
        let (x, y, z) = (total_spin(k, 'X'), total_spin(k, 'Y'), total_spin(k, 'Z'));
        let xs = to_dense(&total_spin_operator::<f64>(k, Axis::X).unwrap());
        let ys = to_dense(&total_spin_operator::<f64>(k, Axis::Y).unwrap());
        let comm = &xs * &ys - &ys * &xs;
        assert!(max_abs(&(comm - z * c(0.0, 2.0))) < 1e-12);
        assert!(
            max_abs(&(&x * &y - &y * &x - to_dense(&total_spin_operator::<f64>(k, Axis::Z).unwrap()) * c(0.0, 2.0)))
                < 1e-12
        );
    }
}
