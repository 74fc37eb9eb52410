// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact counts against brute-force enumeration and elementary identities.

mod common;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use common::{real_part, spin_squared};
use exchange_dfs::combinatorics::{
    dicke_multiplicity, encoded_qubit_count, hook_lengths, singlet_multiplicity, standard_tableaux_count, Spin,
    YoungDiagram,
};

/// Number of standard fillings, by removing the largest entry from every corner.
fn count_tableaux(shape: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    let shape: Vec<u32> = shape.iter().copied().filter(|&r| r > 0).collect();
    if shape.iter().sum::<u32>() <= 1 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&shape) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for r in 0..shape.len() {
        let next = shape.get(r + 1).copied().unwrap_or(0);
        if shape[r] > next {
            let mut smaller = shape.clone();
            smaller[r] -= 1;
            total += count_tableaux(&smaller, memo);
        }
    }
    memo.insert(shape, total.clone());
    total
}

fn binomial(n: u32, k: u32) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn hook_formula_matches_enumeration_for_all_small_shapes() {
    let mut memo = HashMap::new();
    for n in 1..=10 {
        for shape in partitions(n, n) {
            let d = YoungDiagram::new(shape.clone()).unwrap();
            assert_eq!(standard_tableaux_count(&d), count_tableaux(&shape, &mut memo), "{shape:?}");
        }
    }
}

#[test]
fn sum_of_squared_irrep_dimensions_is_factorial() {
    for n in 1..=9u32 {
        let total: BigUint = partitions(n, n)
            .into_iter()
            .map(|s| {
                let f = standard_tableaux_count(&YoungDiagram::new(s).unwrap());
                &f * &f
            })
            .sum();
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        assert_eq!(total, fact);
    }
}

#[test]
fn hook_lengths_by_direct_counting() {
    for shape in [vec![4, 2, 1], vec![3, 3], vec![5], vec![2, 2, 2, 1]] {
        let d = YoungDiagram::new(shape.clone()).unwrap();
        let hooks = hook_lengths(&d);
        for (r, row) in hooks.iter().enumerate() {
            for (col, &h) in row.iter().enumerate() {
                let arm = shape[r] - col as u32 - 1;
                let leg = shape[r + 1..].iter().filter(|&&len| len > col as u32).count() as u32;
                assert_eq!(h, arm + leg + 1);
            }
        }
    }
}

#[test]
fn singlets_are_catalan_numbers() {
    for k in (2..=40u32).step_by(2) {
        let n = k / 2;
        let catalan = binomial(2 * n, n) / (n + 1);
        assert_eq!(singlet_multiplicity(k).unwrap(), catalan, "K={k}");
        let two_row = YoungDiagram::rectangle(n, 2).unwrap();
        assert_eq!(standard_tableaux_count(&two_row), catalan);
        assert_eq!(dicke_multiplicity(k, Spin::ZERO).unwrap(), catalan);
    }
}

#[test]
fn dicke_multiplicity_is_binomial_difference() {
    // Number of spin-S multiplets = C(K, K/2 − S) − C(K, K/2 − S − 1).
    for k in 1..=30u32 {
        for s in Spin::allowed(k) {
            let lower = (k - s.twice()) / 2;
            let expected = binomial(k, lower) - if lower == 0 { BigUint::zero() } else { binomial(k, lower - 1) };
            assert_eq!(dicke_multiplicity(k, s).unwrap(), expected, "K={k} 2S={}", s.twice());
        }
    }
}

#[test]
fn completeness_even_and_odd() {
    for k in 1..=40u32 {
        let total: BigUint =
            Spin::allowed(k).map(|s| dicke_multiplicity(k, s).unwrap() * BigUint::from(s.multiplet_size())).sum();
        assert_eq!(total, BigUint::one() << k as usize, "K={k}");
    }
}

#[test]
fn multiplicities_match_spin_squared_spectrum() {
    // Eigenvalue of S² (unnormalized Paulis) is 4·S(S+1).
    for k in 1..=6u32 {
        let eig = real_part(&spin_squared(k as usize)).symmetric_eigen();
        for s in Spin::allowed(k) {
            let half = s.twice() as f64 / 2.0;
            let target = 4.0 * half * (half + 1.0);
            let count = eig.eigenvalues.iter().filter(|l| (*l - target).abs() < 1e-8).count() as u32;
            assert_eq!(count % s.multiplet_size(), 0);
            assert_eq!(
                BigUint::from(count / s.multiplet_size()),
                dicke_multiplicity(k, s).unwrap(),
                "K={k} 2S={}",
                s.twice()
            );
        }
    }
}

#[test]
fn encoded_qubits_agree_with_float_log() {
    for k in (2..=60u32).step_by(2) {
        let n = k / 2;
        let catalan = binomial(2 * n, n) / (n + 1);
        let expected = catalan.to_string().parse::<f64>().unwrap().log2();
        assert!((encoded_qubit_count(k).unwrap() - expected).abs() < 1e-9, "K={k}");
    }
    assert_eq!(encoded_qubit_count(4).unwrap(), 1.0);
    assert!((encoded_qubit_count(6).unwrap() - 5f64.log2()).abs() < 1e-12);
}

#[test]
fn overhead_decreases_toward_three_halves() {
    // Stirling: log₂ C_n ≈ 2n − (3/2)log₂ n − log₂ √π with n = K/2, so
    // (K − v)/log₂K ≈ 3/2 − 0.674/log₂K: the gap to 3/2 shrinks monotonically.
    let ratios: Vec<f64> = [100u32, 200, 500, 1000]
        .iter()
        .map(|&k| (k as f64 - encoded_qubit_count(k).unwrap()) / (k as f64).log2())
        .collect();
    let gaps: Vec<f64> = ratios.iter().map(|r| (r - 1.5).abs()).collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
    assert!((ratios[3] - 1.5).abs() < 0.1, "{ratios:?}");
    let n = 500f64;
    let stirling = 1000.0 - (2.0 * n - 1.5 * n.log2() - std::f64::consts::PI.sqrt().log2());
    assert!((ratios[3] * 1000f64.log2() - stirling).abs() < 1e-2);
}
