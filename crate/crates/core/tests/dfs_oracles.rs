// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Singlet bases and encoded exchange matrices against dense references.

mod common;

use common::*;
use exchange_dfs::combinatorics::singlet_multiplicity;
use exchange_dfs::dfs::{
    check_dfs_condition, check_invariance, dfs_basis, encoded_pauli_decomposition, exchange_invariance,
    four_qubit_exchange_table, project_operator, verify_constant_j,
};
use exchange_dfs::linalg::DenseMatrix;
use exchange_dfs::operator::{embed_single_qubit, exchange_hamiltonian, exchange_operator, qubit_pairs, Pauli};
use exchange_dfs::{DfsBasis, ExchangeModel, SparseOperator, StateVector};
use num_complex::Complex64;

const S3: f64 = 0.866_025_403_784_438_6; // √3/2

fn dense2(m: [[f64; 2]; 2]) -> DenseMatrix<f64> {
    DenseMatrix::from_real(2, &[m[0][0], m[0][1], m[1][0], m[1][1]]).unwrap()
}

fn ket(bits: &str) -> usize {
    usize::from_str_radix(bits, 2).unwrap()
}

#[test]
fn dimension_matches_full_space_kernel() {
    for k in [2usize, 4, 6, 8] {
        let kernel = kernel_dim(&real_part(&spin_squared(k)), 1e-8);
        let basis = dfs_basis::<f64>(k).unwrap();
        assert_eq!(basis.dim(), kernel, "K={k}");
        assert_eq!(singlet_multiplicity(k as u32).unwrap(), (kernel as u32).into());
    }
    assert_eq!(dfs_basis::<f64>(10).unwrap().dim(), 42);
}

#[test]
fn basis_vectors_are_orthonormal_singlets() {
    for k in [2usize, 4, 6, 8] {
        let s2 = spin_squared(k);
        let basis = dfs_basis::<f64>(k).unwrap();
        let vs: Vec<nalgebra::DVector<Complex64>> =
            basis.vectors().iter().map(|v| nalgebra::DVector::from_column_slice(v.amplitudes())).collect();
        for (a, u) in vs.iter().enumerate() {
            assert!((&s2 * u).norm() < 1e-12, "K={k}");
            for (b, w) in vs.iter().enumerate() {
                let ip = u.dotc(w);
                let target = if a == b { 1.0 } else { 0.0 };
                assert!((ip - c(target, 0.0)).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn two_qubit_basis_is_the_singlet() {
    let b = dfs_basis::<f64>(2).unwrap();
    let v = b.vectors()[0].amplitudes();
    let s = 0.5f64.sqrt();
    // Overall sign is a convention; compare up to ±1.
    let sign = v[1].re.signum();
    assert!((v[1] - c(sign * s, 0.0)).norm() < 1e-12);
    assert!((v[2] - c(-sign * s, 0.0)).norm() < 1e-12);
    assert!(v[0].norm() < 1e-15 && v[3].norm() < 1e-15);
}

#[test]
fn four_qubit_basis_closed_form() {
    let b = dfs_basis::<f64>(4).unwrap();
    let (zero, one) = (b.vectors()[0].amplitudes(), b.vectors()[1].amplitudes());
    let r = 1.0 / (2.0 * 3f64.sqrt());
    let mut expect0 = [0.0; 16];
    let mut expect1 = [0.0; 16];
    for (bits, w0, w1) in [
        ("0110", 0.5, -r),
        ("1001", 0.5, -r),
        ("1010", -0.5, -r),
        ("0101", -0.5, -r),
        ("0011", 0.0, 2.0 * r),
        ("1100", 0.0, 2.0 * r),
    ] {
        expect0[ket(bits)] = w0;
        expect1[ket(bits)] = w1;
    }
    for x in 0..16 {
        assert!((zero[x] - c(expect0[x], 0.0)).norm() < 1e-15, "x={x}");
        assert!((one[x] - c(expect1[x], 0.0)).norm() < 1e-15, "x={x}");
    }
}

#[test]
fn encoded_exchange_reference_matrices() {
    let basis = dfs_basis::<f64>(4).unwrap();
    let neg_z = dense2([[-1.0, 0.0], [0.0, 1.0]]);
    let plus = dense2([[0.5, S3], [S3, -0.5]]);
    let minus = dense2([[0.5, -S3], [-S3, -0.5]]);
    for ((i, j), want) in
        [((1, 2), &neg_z), ((3, 4), &neg_z), ((1, 3), &plus), ((2, 4), &plus), ((1, 4), &minus), ((2, 3), &minus)]
    {
        let enc = project_operator(&exchange_operator::<f64>(4, i, j).unwrap(), &basis).unwrap();
        assert!(enc.matrix().max_abs_diff(want).unwrap() < 1e-10, "E_{i}{j}");
    }
    for row in four_qubit_exchange_table::<f64>().unwrap() {
        assert!(row.residual < 1e-12, "{:?}", row.pair);
    }
}

#[test]
fn encoded_matrices_from_dense_inner_products() {
    // ⟨ã|E|b̃⟩ via nalgebra, independent of project_operator.
    let basis = dfs_basis::<f64>(4).unwrap();
    let vs: Vec<nalgebra::DVector<Complex64>> =
        basis.vectors().iter().map(|v| nalgebra::DVector::from_column_slice(v.amplitudes())).collect();
    for (i, j) in qubit_pairs(4) {
        let e = swap(4, i, j);
        let enc = project_operator(&exchange_operator::<f64>(4, i, j).unwrap(), &basis).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let m = vs[a].dotc(&(&e * &vs[b]));
                assert!((m - enc.matrix().get(a, b)).norm() < 1e-14);
            }
        }
    }
}

#[test]
fn pauli_decomposition_of_exchange() {
    let basis = dfs_basis::<f64>(4).unwrap();
    for ((i, j), want) in [
        ((1, 2), [0.0, 0.0, 0.0, -1.0]),
        ((2, 4), [0.0, S3, 0.0, 0.5]),
        ((2, 3), [0.0, -S3, 0.0, 0.5]),
        ((1, 3), [0.0, S3, 0.0, 0.5]),
    ] {
        let enc = project_operator(&exchange_operator::<f64>(4, i, j).unwrap(), &basis).unwrap();
        let coeffs = encoded_pauli_decomposition(&enc).unwrap();
        for (got, w) in coeffs.as_array().iter().zip(want) {
            assert!((got - c(w, 0.0)).norm() < 1e-12, "E_{i}{j}");
        }
        assert!(coeffs.reconstruct().max_abs_diff(enc.matrix()).unwrap() < 1e-14);
    }
}

#[test]
fn decomposition_rejects_larger_subspaces() {
    let basis = dfs_basis::<f64>(6).unwrap();
    let enc = project_operator(&exchange_operator::<f64>(6, 1, 2).unwrap(), &basis).unwrap();
    assert_eq!(enc.dim(), 5);
    assert!(encoded_pauli_decomposition(&enc).is_err());
}

#[test]
fn identity_projects_to_identity() {
    for k in [2, 4, 6] {
        let basis = dfs_basis::<f64>(k).unwrap();
        let enc = project_operator(&SparseOperator::identity(k).unwrap(), &basis).unwrap();
        assert!(enc.matrix().max_abs_diff(&DenseMatrix::identity(basis.dim())).unwrap() < 1e-14);
    }
}

#[test]
fn projection_respects_composition_for_four_qubits() {
    let basis = dfs_basis::<f64>(4).unwrap();
    let pairs: Vec<_> = qubit_pairs(4).collect();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let a = exchange_operator::<f64>(4, i, j).unwrap();
            let b = exchange_operator::<f64>(4, k, l).unwrap();
            let whole = project_operator(&a.matmul(&b).unwrap(), &basis).unwrap();
            let parts = project_operator(&a, &basis).unwrap().matmul(&project_operator(&b, &basis).unwrap()).unwrap();
            assert!(whole.max_abs_diff(&parts).unwrap() < 1e-12);
        }
    }
}

#[test]
fn six_qubit_projection_respects_composition() {
    let basis = dfs_basis::<f64>(6).unwrap();
    let a = exchange_operator::<f64>(6, 1, 4).unwrap();
    let b = exchange_operator::<f64>(6, 2, 6).unwrap();
    let whole = project_operator(&a.matmul(&b).unwrap(), &basis).unwrap();
    let parts = project_operator(&a, &basis).unwrap().matmul(&project_operator(&b, &basis).unwrap()).unwrap();
    assert!(whole.max_abs_diff(&parts).unwrap() < 1e-12);
}

#[test]
fn exchange_never_leaves_the_singlet_space() {
    for k in [2, 4, 6] {
        let basis = dfs_basis::<f64>(k).unwrap();
        let report = exchange_invariance(&basis).unwrap();
        assert!(report.max_commutator < 1e-12 && report.max_leakage < 1e-12, "K={k} {report:?}");
    }
}

#[test]
fn single_qubit_pauli_leaks() {
    let basis = dfs_basis::<f64>(4).unwrap();
    let x1 = embed_single_qubit::<f64>(Pauli::X, 1, 4).unwrap();
    let report = check_invariance(&x1, &basis, 1e-12).unwrap();
    assert!(!report.invariant);
    // σ^x_1 maps each singlet to a spin-1 state orthogonal to the DFS: leakage² = 2.
    let dense: f64 = basis
        .vectors()
        .iter()
        .map(|v| {
            let w = nalgebra::DVector::from_column_slice(v.amplitudes());
            let out = embed('X', 1, 4) * w;
            out.norm_squared()
        })
        .sum();
    assert!((report.leakage - dense.sqrt()).abs() < 1e-12);
    assert!(report.leakage > 0.5);
}

#[test]
fn identity_has_no_leakage() {
    let basis = dfs_basis::<f64>(4).unwrap();
    let report = check_invariance(&SparseOperator::identity(4).unwrap(), &basis, 1e-12).unwrap();
    assert!(report.invariant && report.leakage < 1e-15, "{report:?}");
}

#[test]
fn replacing_a_vector_with_all_up_breaks_the_condition() {
    let good = dfs_basis::<f64>(4).unwrap();
    assert!(check_dfs_condition(&good, 1e-12).unwrap().passed);
    let bad =
        DfsBasis::from_vectors(4, vec![good.vectors()[0].clone(), StateVector::from_bits("0000").unwrap()], 1e-12)
            .unwrap();
    let report = check_dfs_condition(&bad, 1e-12).unwrap();
    assert!(!report.passed);
    assert!((report.max_residual - 4.0).abs() < 1e-12);
    assert!(check_dfs_condition(&dfs_basis::<f64>(6).unwrap(), 1e-12).unwrap().passed);
}

#[test]
fn constant_coupling_is_a_global_phase() {
    for (k, nu) in [(2usize, -0.25), (4, 0.0), (6, 0.25), (8, 0.5)] {
        let r = verify_constant_j::<f64>(k, 1.0).unwrap();
        assert!(r.phase_only, "K={k} {r:?}");
        assert!((r.nu - nu).abs() < 1e-15);
        assert!(r.identity_residual < 1e-10 && r.eigen_residual < 1e-10);

        // Independent: restrict H_ex to the DFS with dense algebra and check ν·I.
        let h = to_dense(&exchange_hamiltonian(&ExchangeModel::uniform(k, 1.0 / k as f64).unwrap()).unwrap());
        let basis = dfs_basis::<f64>(k).unwrap();
        let vs: Vec<nalgebra::DVector<Complex64>> =
            basis.vectors().iter().map(|v| nalgebra::DVector::from_column_slice(v.amplitudes())).collect();
        for (a, u) in vs.iter().enumerate() {
            for (b, w) in vs.iter().enumerate() {
                let target = if a == b { nu } else { 0.0 };
                assert!((u.dotc(&(&h * w)) - c(target, 0.0)).norm() < 1e-10);
            }
        }
    }
}

#[test]
fn constant_coupling_rejects_odd_and_large_registers() {
    assert!(verify_constant_j::<f64>(3, 1.0).is_err());
    assert!(verify_constant_j::<f64>(10, 1.0).is_err());
}

#[test]
fn nonuniform_couplings_do_leak_phase_structure() {
    // A non-uniform model still preserves the DFS (each E_ij does) but is not ∝ I on it.
    let mut model = ExchangeModel::uniform(4, 0.25).unwrap();
    model.set_coupling(1, 3, 1.0).unwrap();
    let basis = dfs_basis::<f64>(4).unwrap();
    let h = exchange_hamiltonian(&model).unwrap();
    assert!(check_invariance(&h, &basis, 1e-12).unwrap().invariant);
    let enc = project_operator(&h, &basis).unwrap();
    let off = enc.matrix().get(0, 1).norm();
    assert!(off > 0.1);
}

#[test]
fn single_precision_reproduces_encoded_table() {
    let table = four_qubit_exchange_table::<f32>().unwrap();
    assert_eq!(table.len(), 6);
    for row in table {
        assert!(row.residual < 1e-5, "{:?} {}", row.pair, row.residual);
    }
    let b = exchange_dfs::DfsBasisF32::from_json(&dfs_basis::<f32>(6).unwrap().to_json()).unwrap();
    assert_eq!(b.dim(), 5);
}
