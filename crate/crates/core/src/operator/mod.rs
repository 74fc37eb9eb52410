// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Sparse operators and statevectors on K-qubit registers.
//!
//! Conventions used throughout:
//!
//! * qubits are numbered `1..=K`; qubit 1 is the most significant bit of a
//!   computational basis index;
//! * Pauli matrices are unnormalized (eigenvalues ±1), so the total spin
//!   operators satisfy `[S_x, S_y] = 2i S_z`;
//! * `ħ = 1` and an exchange evolution angle is `θ = J_ij · t`.

mod model;
mod pauli;
mod sparse;
mod state;

pub use model::ExchangeModel;
pub use pauli::{Pauli, PauliString};
pub use sparse::{commutator, SparseOperator};
pub use state::{format_bits, parse_bits, StateVector};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{c, cone, Real};

/// Bit mask of the 1-based `qubit` in a `num_qubits` register.
#[inline]
pub fn qubit_mask(num_qubits: usize, qubit: usize) -> usize {
    debug_assert!(qubit >= 1 && qubit <= num_qubits);
    1usize << (num_qubits - qubit)
}

fn check_site(site: usize, num_qubits: usize) -> Result<()> {
    if num_qubits == 0 {
        return Err(Error::EmptyRegister);
    }
    if site == 0 || site > num_qubits {
        return Err(Error::QubitIndex { site, num_qubits });
    }
    Ok(())
}

/// Validates an exchange pair and returns it ordered.
pub fn check_pair(num_qubits: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    check_site(i, num_qubits)?;
    check_site(j, num_qubits)?;
    if i == j {
        return Err(Error::InvalidPair(i));
    }
    Ok((i.min(j), i.max(j)))
}

/// All pairs `(i, j)` with `1 <= i < j <= K`, lexicographic.
pub fn qubit_pairs(num_qubits: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=num_qubits).flat_map(move |i| (i + 1..=num_qubits).map(move |j| (i, j)))
}

/// Axis of a total spin component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn pauli(self) -> Pauli {
        match self {
            Axis::X => Pauli::X,
            Axis::Y => Pauli::Y,
            Axis::Z => Pauli::Z,
        }
    }
}

/// `pauli` acting on the 1-based `site`, identity elsewhere.
pub fn embed_single_qubit<T: Real>(pauli: Pauli, site: usize, num_qubits: usize) -> Result<SparseOperator<T>> {
    check_site(site, num_qubits)?;
    Ok(PauliString::single(num_qubits, site, pauli)?.to_operator())
}

/// Permutation operator `E_ij` swapping qubits `i` and `j`.
pub fn exchange_operator<T: Real>(num_qubits: usize, i: usize, j: usize) -> Result<SparseOperator<T>> {
    let (i, j) = check_pair(num_qubits, i, j)?;
    let (mi, mj) = (qubit_mask(num_qubits, i), qubit_mask(num_qubits, j));
    let triplets = (0..1usize << num_qubits).map(|x| (swap_bits(x, mi, mj), x, cone()));
    SparseOperator::from_triplets(num_qubits, triplets)
}

#[inline]
fn swap_bits(x: usize, mi: usize, mj: usize) -> usize {
    if ((x & mi) == 0) != ((x & mj) == 0) {
        x ^ mi ^ mj
    } else {
        x
    }
}

/// `½(I + X_i X_j + Y_i Y_j + Z_i Z_j)`, assembled from Pauli strings.
///
/// Equal to [`exchange_operator`]; kept as an independent construction.
pub fn heisenberg_exchange<T: Real>(num_qubits: usize, i: usize, j: usize) -> Result<SparseOperator<T>> {
    let (i, j) = check_pair(num_qubits, i, j)?;
    let mut acc = SparseOperator::identity(num_qubits)?;
    for p in Pauli::NON_IDENTITY {
        let mut s = vec![Pauli::I; num_qubits];
        s[i - 1] = p;
        s[j - 1] = p;
        acc = acc.add(&PauliString::new(s).to_operator())?;
    }
    Ok(acc.scale_real(T::lit(0.5)))
}

/// `S_α = Σ_i σ_i^α`.
pub fn total_spin_operator<T: Real>(num_qubits: usize, axis: Axis) -> Result<SparseOperator<T>> {
    if num_qubits == 0 {
        return Err(Error::EmptyRegister);
    }
    let mut triplets = Vec::with_capacity(num_qubits << num_qubits);
    for site in 1..=num_qubits {
        let op = embed_single_qubit::<T>(axis.pauli(), site, num_qubits)?;
        triplets.extend(op.iter());
    }
    SparseOperator::from_triplets(num_qubits, triplets)
}

/// `S² = S_x² + S_y² + S_z²`.
pub fn total_spin_squared<T: Real>(num_qubits: usize) -> Result<SparseOperator<T>> {
    let mut acc = SparseOperator::zero(num_qubits)?;
    for axis in Axis::ALL {
        let s = total_spin_operator::<T>(num_qubits, axis)?;
        acc = acc.add(&s.matmul(&s)?)?;
    }
    Ok(acc)
}

/// `H_ex = ½ Σ_{i<j} J_ij E_ij`, one term per unordered pair.
///
/// With uniform couplings `J_ij = J/K` this equals `(J/8K)[(K² − 4K) I + S²]`.
pub fn exchange_hamiltonian<T: Real>(model: &ExchangeModel<T>) -> Result<SparseOperator<T>> {
    let k = model.num_qubits();
    let half = T::lit(0.5);
    let mut triplets = Vec::new();
    for (i, j) in qubit_pairs(k) {
        let jij = model.coupling(i, j);
        if jij == T::zero() {
            continue;
        }
        let coeff = c(half * jij, T::zero());
        triplets.extend(exchange_operator::<T>(k, i, j)?.iter().map(|(r, col, v)| (r, col, v * coeff)));
    }
    SparseOperator::from_triplets(k, triplets)
}

/// `exp(−iθ E_ij) = cos θ · I − i sin θ · E_ij` (closed form since `E_ij² = I`).
pub fn exchange_unitary<T: Real>(num_qubits: usize, i: usize, j: usize, theta: T) -> Result<SparseOperator<T>> {
    let (i, j) = check_pair(num_qubits, i, j)?;
    let (mi, mj) = (qubit_mask(num_qubits, i), qubit_mask(num_qubits, j));
    let (cos, sin) = (c(theta.cos(), T::zero()), c(T::zero(), -theta.sin()));
    let triplets = (0..1usize << num_qubits).flat_map(|x| [(x, x, cos), (swap_bits(x, mi, mj), x, sin)]);
    SparseOperator::from_triplets(num_qubits, triplets)
}

/// Applies `exp(−iθ E_ij)` to `state` in place, without building the operator.
pub fn apply_exchange_unitary_in_place<T: Real>(
    state: &mut StateVector<T>,
    i: usize,
    j: usize,
    theta: T,
) -> Result<()> {
    let k = state.num_qubits();
    let (i, j) = check_pair(k, i, j)?;
    let (mi, mj) = (qubit_mask(k, i), qubit_mask(k, j));
    let (cos, msin) = (theta.cos(), -theta.sin());
    let amps = state.amplitudes_mut();
    // Only the |..1..0..> / |..0..1..> pairs mix; equal-bit components pick up e^{-iθ}.
    let diag = c(cos, msin);
    for x in 0..amps.len() {
        let (bi, bj) = (x & mi != 0, x & mj != 0);
        if bi == bj {
            amps[x] *= diag;
        } else if bi {
            let y = x ^ mi ^ mj;
            let (a, b) = (amps[x], amps[y]);
            amps[x] = a.scale(cos) + b * c(T::zero(), msin);
            amps[y] = b.scale(cos) + a * c(T::zero(), msin);
        }
    }
    Ok(())
}

/// Matrix-vector product; see [`SparseOperator::apply`].
pub fn apply<T: Real>(op: &SparseOperator<T>, state: &StateVector<T>) -> Result<StateVector<T>> {
    op.apply(state)
}

/// Levi-Civita structure `[S_a, S_b] = 2i ε_abc S_c`, as `(sign, c)`.
pub fn su2_structure(a: Axis, b: Axis) -> Option<(i8, Axis)> {
    use Axis::*;
    match (a, b) {
        (X, Y) => Some((1, Z)),
        (Y, Z) => Some((1, X)),
        (Z, X) => Some((1, Y)),
        (Y, X) => Some((-1, Z)),
        (Z, Y) => Some((-1, X)),
        (X, Z) => Some((-1, Y)),
        _ => None,
    }
}

/// Max entrywise residual of `[S_a, S_b] − 2i ε_abc S_c` over all axis pairs.
pub fn su2_residual<T: Real>(num_qubits: usize) -> Result<T> {
    let s: Vec<SparseOperator<T>> =
        Axis::ALL.iter().map(|&a| total_spin_operator(num_qubits, a)).collect::<Result<_>>()?;
    let idx = |a: Axis| a as usize;
    let mut worst = T::zero();
    for a in Axis::ALL {
        for b in Axis::ALL {
            let comm = commutator(&s[idx(a)], &s[idx(b)])?;
            let expected = match su2_structure(a, b) {
                Some((sign, cax)) => s[idx(cax)].scale(c(T::zero(), T::lit(2.0 * f64::from(sign)))),
                None => SparseOperator::zero(num_qubits)?,
            };
            worst = worst.max(comm.max_abs_diff(&expected)?);
        }
    }
    Ok(worst)
}
