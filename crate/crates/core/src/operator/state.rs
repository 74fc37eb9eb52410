// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real, C};

/// Dense complex amplitude vector over a K-qubit register.
///
/// Index `x` encodes `|ε_1 … ε_K⟩` with `ε_1` the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Real> {
    num_qubits: usize,
    amplitudes: Vec<C<T>>,
}

impl<T: Real> StateVector<T> {
    /// Wraps raw amplitudes; does not normalize.
    pub fn new(num_qubits: usize, amplitudes: Vec<C<T>>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        let dim = 1usize << num_qubits;
        if amplitudes.len() != dim {
            return Err(Error::Shape { expected: dim, found: amplitudes.len() });
        }
        Ok(Self { num_qubits, amplitudes })
    }

    /// Wraps and normalizes; fails on a zero vector.
    pub fn normalized(num_qubits: usize, amplitudes: Vec<C<T>>) -> Result<Self> {
        let mut s = Self::new(num_qubits, amplitudes)?;
        s.normalize()?;
        Ok(s)
    }

    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::new(num_qubits, vec![czero(); 1usize << num_qubits])
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        let mut s = Self::zero(num_qubits)?;
        let dim = s.dim();
        if index >= dim {
            return Err(Error::Shape { expected: dim, found: index });
        }
        s.amplitudes[index] = cone();
        Ok(s)
    }

    /// Computational basis state from a bitstring such as `"0110"` (qubit 1 first).
    pub fn from_bits(bits: &str) -> Result<Self> {
        let index = parse_bits(bits)?;
        Self::basis(bits.len(), index)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C<T>] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C<T>> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let n = self.norm();
        if n.is_nan() || n <= T::zero() {
            return Err(Error::NotNormalized { norm: n.as_f64() });
        }
        let inv = n.recip();
        self.amplitudes.iter_mut().for_each(|a| *a = a.scale(inv));
        Ok(())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C<T>> {
        self.check_dim(other)?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).fold(czero(), |acc, (a, b)| acc + a.conj() * b))
    }

    /// Phase-insensitive overlap `|⟨self|other⟩|`.
    pub fn fidelity(&self, other: &Self) -> Result<T> {
        Ok(self.inner(other)?.norm())
    }

    pub fn scaled(&self, factor: C<T>) -> Self {
        Self { num_qubits: self.num_qubits, amplitudes: self.amplitudes.iter().map(|a| a * factor).collect() }
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: C<T>, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a + factor * b).collect(),
        })
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_dim(other)?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).fold(T::zero(), |m, (a, b)| m.max((a - b).norm())))
    }

    /// Multiplies by the phase that makes the first amplitude of modulus
    /// above `tol` real and positive.
    pub fn fix_phase(&mut self, tol: T) {
        if let Some(a) = self.amplitudes.iter().find(|a| a.norm() > tol).copied() {
            let phase = a.conj() / a.norm();
            self.amplitudes.iter_mut().for_each(|x| *x *= phase);
        }
    }

    pub(crate) fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Shape { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }
}

/// Parses `"0110"` into a computational index, qubit 1 most significant.
pub fn parse_bits(bits: &str) -> Result<usize> {
    if bits.is_empty() || bits.len() > usize::BITS as usize - 1 {
        return Err(Error::Parse(format!("bitstring of length {} not supported", bits.len())));
    }
    bits.chars().try_fold(0usize, |acc, ch| match ch {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        other => Err(Error::Parse(format!("'{other}' in bitstring"))),
    })
}

/// Formats a computational index as a `num_qubits`-character bitstring.
pub fn format_bits(index: usize, num_qubits: usize) -> String {
    (1..=num_qubits).map(|q| if index & super::qubit_mask(num_qubits, q) != 0 { '1' } else { '0' }).collect()
}
