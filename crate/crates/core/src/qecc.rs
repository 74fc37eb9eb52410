// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! The [[5,1,3]] perfect code on abstract qubits.

use std::fmt;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operator::{Pauli, PauliString, StateVector};
use crate::scalar::{c, Real};

pub const CODE_LENGTH: usize = 5;
pub const NUM_GENERATORS: usize = 4;

/// Outcome bits of the four generators; bit `r` is generator `r`, `1` ↔ eigenvalue −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome(u8);

impl Syndrome {
    pub const TRIVIAL: Syndrome = Syndrome(0);

    pub fn from_bits(bits: [bool; NUM_GENERATORS]) -> Self {
        Syndrome(bits.iter().enumerate().fold(0u8, |acc, (r, &b)| acc | (u8::from(b) << r)))
    }

    pub fn from_index(index: u8) -> Self {
        Syndrome(index & 0x0f)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn bit(self, generator: usize) -> bool {
        self.0 >> generator & 1 == 1
    }

    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }

    pub fn all() -> impl Iterator<Item = Syndrome> {
        (0..16u8).map(Syndrome)
    }
}

/// Generator outcomes left to right, e.g. `"0110"`.
impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..NUM_GENERATORS {
            write!(f, "{}", u8::from(self.bit(r)))?;
        }
        Ok(())
    }
}

impl Serialize for Syndrome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// How [`StabilizerCode::measure_syndrome_with`] resolves each generator.
pub enum Measurement<'a, R: Rng + ?Sized> {
    /// Projective measurement with outcomes drawn from `rng`.
    Sampled(&'a mut R),
    /// Expects every outcome to be certain; anything else is an error.
    Deterministic,
}

/// Five-slot, one-logical-qubit stabilizer code with a lookup decoder.
#[derive(Debug, Clone)]
pub struct StabilizerCode<T: Real> {
    generators: Vec<PauliString>,
    logical_x: PauliString,
    logical_z: PauliString,
    table: Vec<PauliString>,
    codewords: [StateVector<T>; 2],
}

impl<T: Real> StabilizerCode<T> {
    /// Cyclic generators `XZZXI, IXZZX, XIXZZ, ZXIXZ`; `X_L = XXXXX`, `Z_L = ZZZZZ`.
    pub fn perfect() -> Self {
        let parse = |s: &str| s.parse::<PauliString>().expect("literal Pauli string");
        let generators: Vec<PauliString> = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"].into_iter().map(parse).collect();
        let logical_x = parse("XXXXX");
        let logical_z = parse("ZZZZZ");

        let mut table: Vec<Option<PauliString>> = vec![None; 16];
        table[0] = Some(PauliString::identity(CODE_LENGTH));
        for site in 1..=CODE_LENGTH {
            for p in Pauli::NON_IDENTITY {
                let e = PauliString::single(CODE_LENGTH, site, p).expect("site in range");
                let s = syndrome_against(&generators, &e);
                assert!(table[s.index()].is_none(), "five-qubit code syndromes must be distinct");
                table[s.index()] = Some(e);
            }
        }
        let table = table.into_iter().map(|e| e.expect("all 16 syndromes covered")).collect();

        let mut zero = StateVector::<T>::basis(CODE_LENGTH, 0).expect("5 qubits");
        for g in &generators {
            let gz = g.apply(&zero).expect("matching length");
            zero = zero.add_scaled(c(T::one(), T::zero()), &gz).expect("matching length");
        }
        zero.normalize().expect("|00000> has nonzero code-space component");
        fix_largest_positive(&mut zero);
        let one = logical_x.apply(&zero).expect("matching length");

        Self { generators, logical_x, logical_z, table, codewords: [zero, one] }
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn logical_x(&self) -> &PauliString {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &PauliString {
        &self.logical_z
    }

    /// Correction applied for each syndrome.
    pub fn correction(&self, syndrome: Syndrome) -> &PauliString {
        &self.table[syndrome.index()]
    }

    /// `|0_L⟩` and `|1_L⟩ = X_L|0_L⟩`.
    pub fn codewords(&self) -> &[StateVector<T>; 2] {
        &self.codewords
    }

    /// Syndrome a Pauli error would produce on a codeword.
    pub fn syndrome_of(&self, error: &PauliString) -> Syndrome {
        syndrome_against(&self.generators, error)
    }

    /// `α|0⟩ + β|1⟩ ↦ α|0_L⟩ + β|1_L⟩`.
    pub fn encode(&self, logical: &StateVector<T>) -> Result<StateVector<T>> {
        if logical.num_qubits() != 1 {
            return Err(Error::Shape { expected: 2, found: logical.dim() });
        }
        let norm = logical.norm();
        if (norm - T::one()).abs() > T::lit(T::CHAINED_TOL) {
            return Err(Error::NotNormalized { norm: norm.as_f64() });
        }
        let [a, b] = [logical.amplitudes()[0], logical.amplitudes()[1]];
        self.codewords[0].scaled(a).add_scaled(b, &self.codewords[1])
    }

    /// Logical amplitudes `(⟨0_L|ψ⟩, ⟨1_L|ψ⟩)` as a one-qubit state (not renormalized).
    pub fn decode(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        StateVector::new(1, vec![self.codewords[0].inner(state)?, self.codewords[1].inner(state)?])
    }

    /// Projective syndrome measurement with outcomes drawn from `rng`.
    pub fn measure_syndrome<R: Rng + ?Sized>(
        &self,
        state: &StateVector<T>,
        rng: &mut R,
    ) -> Result<(Syndrome, StateVector<T>)> {
        self.measure_syndrome_with(state, Measurement::Sampled(rng))
    }

    /// Syndrome measurement that fails unless every generator outcome is certain.
    pub fn measure_syndrome_deterministic(&self, state: &StateVector<T>) -> Result<(Syndrome, StateVector<T>)> {
        self.measure_syndrome_with::<rand_chacha::ChaCha8Rng>(state, Measurement::Deterministic)
    }

    pub fn measure_syndrome_with<R: Rng + ?Sized>(
        &self,
        state: &StateVector<T>,
        mut mode: Measurement<'_, R>,
    ) -> Result<(Syndrome, StateVector<T>)> {
        if state.num_qubits() != CODE_LENGTH {
            return Err(Error::Shape { expected: 1 << CODE_LENGTH, found: state.dim() });
        }
        let tol = T::lit(T::CHAINED_TOL);
        let mut current = state.clone();
        let mut bits = [false; NUM_GENERATORS];
        for (r, g) in self.generators.iter().enumerate() {
            let gpsi = g.apply(&current)?;
            let half = c(T::lit(0.5), T::zero());
            let plus = current.add_scaled(c(T::one(), T::zero()), &gpsi)?.scaled(half);
            let minus = current.add_scaled(c(-T::one(), T::zero()), &gpsi)?.scaled(half);
            let (pp, pm) = (plus.norm_sqr(), minus.norm_sqr());
            let total = pp + pm;
            if total.is_nan() || total <= T::zero() {
                return Err(Error::InconsistentState("cannot measure a zero-norm state".into()));
            }
            let take_minus = match &mut mode {
                Measurement::Sampled(rng) => T::lit(rng.random::<f64>()) * total >= pp,
                Measurement::Deterministic => {
                    let (kept, other) = if pm > pp { (pm, pp) } else { (pp, pm) };
                    if other / total > tol || kept.is_nan() || kept <= T::zero() {
                        return Err(Error::InconsistentState(format!(
                            "generator {r} outcome is not deterministic (P(+1) = {})",
                            (pp / total).as_f64()
                        )));
                    }
                    pm > pp
                }
            };
            bits[r] = take_minus;
            current = if take_minus { minus } else { plus };
            current.normalize()?;
        }
        Ok((Syndrome::from_bits(bits), current))
    }

    /// Applies the lookup-table correction for `syndrome`.
    pub fn correct(&self, state: &StateVector<T>, syndrome: Syndrome) -> Result<StateVector<T>> {
        self.correction(syndrome).apply(state)
    }

    /// 16-row table: syndrome bits then the correcting Pauli string.
    pub fn syndrome_table_text(&self) -> String {
        let mut out = String::from("# syndrome correction\n");
        for s in Syndrome::all() {
            out.push_str(&format!("{s} {}\n", self.correction(s)));
        }
        out
    }
}

fn syndrome_against(generators: &[PauliString], error: &PauliString) -> Syndrome {
    let mut bits = [false; NUM_GENERATORS];
    for (r, g) in generators.iter().enumerate() {
        bits[r] = !g.commutes_with(error);
    }
    Syndrome::from_bits(bits)
}

fn fix_largest_positive<T: Real>(v: &mut StateVector<T>) {
    let amps = v.amplitudes();
    let mut best = 0;
    for (k, a) in amps.iter().enumerate() {
        if a.norm() > amps[best].norm() + T::lit(T::EXACT_TOL) {
            best = k;
        }
    }
    let a = amps[best];
    let phase = a.conj() / a.norm();
    *v = v.scaled(phase);
}
