// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{qubit_mask, SparseOperator, StateVector};
use crate::error::{Error, Result};
use crate::scalar::{c, Real, C};

/// Single-qubit Pauli label, with the unnormalized convention (eigenvalues ±1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    pub const NON_IDENTITY: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    /// Action on a computational basis bit: `P|b⟩ = phase · |b'⟩`.
    ///
    /// The phase is returned as `(re, im)` with entries in {-1, 0, 1}.
    #[inline]
    pub fn act_on_bit(self, bit: bool) -> (bool, (i8, i8)) {
        match (self, bit) {
            (Pauli::I, b) => (b, (1, 0)),
            (Pauli::X, b) => (!b, (1, 0)),
            // Y|0> = i|1>, Y|1> = -i|0>
            (Pauli::Y, false) => (true, (0, 1)),
            (Pauli::Y, true) => (false, (0, -1)),
            (Pauli::Z, false) => (false, (1, 0)),
            (Pauli::Z, true) => (true, (-1, 0)),
        }
    }

    #[inline]
    fn flips(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    #[inline]
    fn phases(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }

    pub fn commutes_with(self, other: Pauli) -> bool {
        self == Pauli::I || other == Pauli::I || self == other
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

impl TryFrom<char> for Pauli {
    type Error = Error;

    fn try_from(ch: char) -> Result<Self> {
        match ch.to_ascii_uppercase() {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::Parse(format!("'{other}' is not a Pauli label"))),
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Tensor product of single-qubit Paulis; position 0 is qubit 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    paulis: Vec<Pauli>,
}

impl PauliString {
    pub fn new(paulis: Vec<Pauli>) -> Self {
        Self { paulis }
    }

    pub fn identity(num_qubits: usize) -> Self {
        Self { paulis: vec![Pauli::I; num_qubits] }
    }

    /// `pauli` on the 1-based `site`, identity elsewhere.
    pub fn single(num_qubits: usize, site: usize, pauli: Pauli) -> Result<Self> {
        if site == 0 || site > num_qubits {
            return Err(Error::QubitIndex { site, num_qubits });
        }
        let mut paulis = vec![Pauli::I; num_qubits];
        paulis[site - 1] = pauli;
        Ok(Self { paulis })
    }

    pub fn num_qubits(&self) -> usize {
        self.paulis.len()
    }

    pub fn paulis(&self) -> &[Pauli] {
        &self.paulis
    }

    /// Pauli on the 1-based qubit `site`.
    pub fn get(&self, site: usize) -> Option<Pauli> {
        site.checked_sub(1).and_then(|s| self.paulis.get(s).copied())
    }

    pub fn weight(&self) -> usize {
        self.paulis.iter().filter(|p| **p != Pauli::I).count()
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }

    /// Symplectic commutation test: the strings commute iff they anticommute
    /// on an even number of sites.
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        assert_eq!(self.num_qubits(), other.num_qubits(), "Pauli string length mismatch");
        self.paulis.iter().zip(&other.paulis).filter(|(a, b)| !a.commutes_with(**b)).count() % 2 == 0
    }

    /// Bit masks over the computational index (MSB = qubit 1) of flipped and phased qubits.
    fn masks(&self) -> (usize, usize, u32) {
        let k = self.num_qubits();
        let mut flip = 0usize;
        let mut phase = 0usize;
        let mut n_y = 0u32;
        for (s, p) in self.paulis.iter().enumerate() {
            let m = qubit_mask(k, s + 1);
            if p.flips() {
                flip |= m;
            }
            if p.phases() {
                phase |= m;
            }
            if *p == Pauli::Y {
                n_y += 1;
            }
        }
        (flip, phase, n_y)
    }

    /// `P|x⟩ = coefficient · |target⟩` for computational index `x`.
    #[inline]
    fn column<T: Real>(masks: (usize, usize, u32), x: usize) -> (usize, C<T>) {
        let (flip, phase, n_y) = masks;
        // Y = i·X·Z, so P = i^{n_y} · X-part · Z-part; Z acts first on |x>.
        let minus = (x & phase).count_ones() % 2 == 1;
        let coeff = match (n_y % 4, minus) {
            (0, false) | (2, true) => (1.0, 0.0),
            (0, true) | (2, false) => (-1.0, 0.0),
            (1, false) | (3, true) => (0.0, 1.0),
            _ => (0.0, -1.0),
        };
        (x ^ flip, c(T::lit(coeff.0), T::lit(coeff.1)))
    }

    pub fn to_operator<T: Real>(&self) -> SparseOperator<T> {
        let k = self.num_qubits();
        let masks = self.masks();
        let triplets = (0..1usize << k).map(|x| {
            let (r, v) = Self::column::<T>(masks, x);
            (r, x, v)
        });
        SparseOperator::from_triplets(k, triplets).expect("Pauli string indices are in range")
    }

    /// Applies the string to a state without materialising the operator.
    pub fn apply<T: Real>(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        if state.num_qubits() != self.num_qubits() {
            return Err(Error::Shape { expected: 1 << self.num_qubits(), found: state.dim() });
        }
        let masks = self.masks();
        let mut out = vec![C::<T>::new(T::zero(), T::zero()); state.dim()];
        for (x, a) in state.amplitudes().iter().enumerate() {
            let (r, v) = Self::column::<T>(masks, x);
            out[r] = v * a;
        }
        StateVector::new(self.num_qubits(), out)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let paulis = s.chars().map(Pauli::try_from).collect::<Result<Vec<_>>>()?;
        if paulis.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        Ok(Self { paulis })
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.paulis {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
