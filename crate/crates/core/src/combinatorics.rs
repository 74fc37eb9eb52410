// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact counting of spin multiplets and singlets.
//!
//! Everything here is integer arithmetic on [`BigUint`]; floating point only
//! appears in [`encoded_qubit_count`], at the final `log2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Total spin stored as `2S`, so half-integer spins stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Spin = Spin(0);

    pub fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    pub fn integer(s: u32) -> Self {
        Spin(2 * s)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    /// `2S + 1`, the number of `m` values in the multiplet.
    pub fn multiplet_size(self) -> u32 {
        self.0 + 1
    }

    /// All spins reachable by K spin-½ particles, ascending.
    pub fn allowed(k: u32) -> impl Iterator<Item = Spin> {
        (k % 2..=k).step_by(2).map(Spin)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of spin-`S` multiplets among K spin-½ particles:
/// `K!(2S+1) / ((K/2+S+1)! (K/2−S)!)`.
pub fn dicke_multiplicity(k: u32, spin: Spin) -> Result<BigUint> {
    let ts = spin.twice();
    if k == 0 || ts > k || !(k + ts).is_multiple_of(2) {
        return Err(Error::SpinDomain { k, twice_spin: ts });
    }
    let upper = (k + ts) / 2 + 1;
    let lower = (k - ts) / 2;
    let num = factorial(k) * (ts + 1);
    let den = factorial(upper) * factorial(lower);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Number of singlets for even K: `K! / ((K/2+1)! (K/2)!)`, the Catalan number `C_{K/2}`.
pub fn singlet_multiplicity(k: u32) -> Result<BigUint> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(Error::SpinDomain { k, twice_spin: 0 });
    }
    dicke_multiplicity(k, Spin::ZERO)
}

/// Young diagram given by non-increasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::YoungDiagram("row lengths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::YoungDiagram(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(Self { rows })
    }

    /// `rows` rows of `cols` boxes each; the singlet shape for K = 2·cols is `rectangle(cols, 2)`.
    pub fn rectangle(cols: u32, rows: u32) -> Result<Self> {
        Self::new(vec![cols; rows as usize])
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_boxes(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Length of column `c` (0-based).
    fn column_len(&self, c: u32) -> u32 {
        self.rows.iter().take_while(|&&r| r > c).count() as u32
    }

    /// Per-box hook lengths: boxes to the right + boxes below + 1.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| (len - c - 1) + (self.column_len(c) - r as u32 - 1) + 1).collect())
            .collect()
    }

    /// Number of standard Young tableaux, `n! / ∏ hooks`.
    pub fn standard_tableaux_count(&self) -> BigUint {
        let prod = self.hook_lengths().iter().flatten().fold(BigUint::one(), |acc, &h| acc * h);
        factorial(self.num_boxes()) / prod
    }
}

pub fn hook_lengths(diagram: &YoungDiagram) -> Vec<Vec<u32>> {
    diagram.hook_lengths()
}

pub fn standard_tableaux_count(diagram: &YoungDiagram) -> BigUint {
    diagram.standard_tableaux_count()
}

/// `log2` of a big integer, accurate to f64 precision.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map_or(f64::NAN, |v| (v as f64).log2());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits fit");
    (top as f64).log2() + shift as f64
}

/// Encoded qubits carried by the K-qubit singlet space: `log2 singlet_multiplicity(K)`.
pub fn encoded_qubit_count(k: u32) -> Result<f64> {
    Ok(log2_big(&singlet_multiplicity(k)?))
}

/// Multiplet multiplicities for every allowed total spin of a K-qubit register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    k: u32,
    entries: BTreeMap<Spin, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct TableRow {
    spin: String,
    twice_spin: u32,
    multiplicity: String,
    states: String,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    schema_version: u32,
    num_qubits: u32,
    rows: Vec<TableRow>,
    total_states: String,
}

impl MultiplicityTable {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyRegister);
        }
        let entries = Spin::allowed(k).map(|s| Ok((s, dicke_multiplicity(k, s)?))).collect::<Result<_>>()?;
        Ok(Self { k, entries })
    }

    pub fn num_qubits(&self) -> u32 {
        self.k
    }

    pub fn get(&self, spin: Spin) -> Option<&BigUint> {
        self.entries.get(&spin)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Spin, &BigUint)> {
        self.entries.iter().map(|(s, m)| (*s, m))
    }

    /// `Σ_S mult(S) · (2S+1)`; equals `2^K`.
    pub fn total_states(&self) -> BigUint {
        self.iter().fold(BigUint::zero(), |acc, (s, m)| acc + m * s.multiplet_size())
    }

    /// JSON with every integer written as an exact decimal string.
    pub fn to_json(&self) -> String {
        let file = TableFile {
            schema_version: 1,
            num_qubits: self.k,
            rows: self
                .iter()
                .map(|(s, m)| TableRow {
                    spin: s.to_string(),
                    twice_spin: s.twice(),
                    multiplicity: m.to_str_radix(10),
                    states: (m * s.multiplet_size()).to_str_radix(10),
                })
                .collect(),
            total_states: self.total_states().to_str_radix(10),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for row in file.rows {
            let m = BigUint::parse_bytes(row.multiplicity.as_bytes(), 10)
                .ok_or_else(|| Error::Parse(format!("bad integer '{}'", row.multiplicity)))?;
            entries.insert(Spin(row.twice_spin), m);
        }
        Ok(Self { k: file.num_qubits, entries })
    }
}
