// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::combinatorics::singlet_multiplicity;
use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;
use crate::operator::{format_bits, parse_bits, total_spin_squared, StateVector};
use crate::scalar::{c, czero, Real};

/// Largest register for which [`dfs_basis`] will run the dense kernel computation.
pub const MAX_BASIS_QUBITS: usize = 12;

/// Orthonormal basis of singlet states spanning the decoherence-free subspace
/// of a K-qubit register under collective decoherence.
#[derive(Debug, Clone, PartialEq)]
pub struct DfsBasis<T: Real> {
    num_qubits: usize,
    vectors: Vec<StateVector<T>>,
}

impl<T: Real> DfsBasis<T> {
    /// Wraps arbitrary vectors after checking orthonormality to `tol`.
    ///
    /// The singlet condition is deliberately not enforced here; use
    /// [`super::check_dfs_condition`] for that.
    pub fn from_vectors(num_qubits: usize, vectors: Vec<StateVector<T>>, tol: T) -> Result<Self> {
        for (a, u) in vectors.iter().enumerate() {
            if u.num_qubits() != num_qubits {
                return Err(Error::Shape { expected: 1 << num_qubits, found: u.dim() });
            }
            for (b, v) in vectors.iter().enumerate().skip(a) {
                let ip = u.inner(v)?;
                let target = if a == b { T::one() } else { T::zero() };
                if (ip - c(target, T::zero())).norm() > tol {
                    return Err(Error::Basis(format!("vectors {a} and {b} have overlap {ip}")));
                }
            }
        }
        Ok(Self { num_qubits, vectors })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[StateVector<T>] {
        &self.vectors
    }

    /// `Σ_v |⟨v|ψ⟩|²`-complement: norm of the component of `state` outside the span.
    pub fn leakage(&self, state: &StateVector<T>) -> Result<T> {
        let mut rest = state.clone();
        for v in &self.vectors {
            let ip = v.inner(&rest)?;
            rest = rest.add_scaled(-ip, v)?;
        }
        Ok(rest.norm())
    }

    /// Coordinates `⟨v_r|ψ⟩` of `state` in this basis.
    pub fn coordinates(&self, state: &StateVector<T>) -> Result<Vec<crate::scalar::C<T>>> {
        self.vectors.iter().map(|v| v.inner(state)).collect()
    }

    /// JSON export; amplitudes are written with 17 significant digits.
    pub fn to_json(&self) -> String {
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                v.amplitudes()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.re != T::zero() || a.im != T::zero())
                    .map(|(x, a)| (format_bits(x, self.num_qubits), sci17(a.re.as_f64()), sci17(a.im.as_f64())))
                    .collect()
            })
            .collect();
        let file = BasisFile { schema_version: 1, num_qubits: self.num_qubits, dimension: self.dim(), vectors };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: BasisFileIn = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.vectors.len() != file.dimension {
            return Err(Error::Parse(format!(
                "dimension {} but {} vectors listed",
                file.dimension,
                file.vectors.len()
            )));
        }
        let mut vectors = Vec::with_capacity(file.dimension);
        for entries in file.vectors {
            let mut v = StateVector::<T>::zero(file.num_qubits)?;
            for (bits, re, im) in entries {
                if bits.len() != file.num_qubits {
                    return Err(Error::Parse(format!("bitstring '{bits}' has wrong length")));
                }
                v.amplitudes_mut()[parse_bits(&bits)?] = c(T::lit(re), T::lit(im));
            }
            vectors.push(v);
        }
        Self::from_vectors(file.num_qubits, vectors, T::lit(T::CHAINED_TOL))
    }
}

fn sci17(x: f64) -> Box<RawValue> {
    RawValue::from_string(format!("{x:.16e}")).expect("formatted float is valid JSON")
}

/// `(basis label, real part, imaginary part)` of one nonzero amplitude.
type Amplitude = (String, Box<RawValue>, Box<RawValue>);

#[derive(Serialize)]
struct BasisFile {
    schema_version: u32,
    num_qubits: usize,
    dimension: usize,
    vectors: Vec<Vec<Amplitude>>,
}

#[derive(Deserialize)]
struct BasisFileIn {
    #[allow(dead_code)]
    schema_version: u32,
    num_qubits: usize,
    dimension: usize,
    vectors: Vec<Vec<(String, f64, f64)>>,
}

/// The K = 4 logical states
/// `|0̃⟩ = (|a⟩ − |b⟩)/2`, `|1̃⟩ = (2|c⟩ − |a⟩ − |b⟩)/(2√3)` with
/// `|a⟩ = |0110⟩+|1001⟩`, `|b⟩ = |1010⟩+|0101⟩`, `|c⟩ = |0011⟩+|1100⟩`.
pub fn four_qubit_logical_states<T: Real>() -> [StateVector<T>; 2] {
    let a = ["0110", "1001"];
    let b = ["1010", "0101"];
    let cc = ["0011", "1100"];
    let build = |terms: &[(&[&str; 2], f64)]| {
        let mut v = StateVector::<T>::zero(4).expect("4 qubits");
        for (group, w) in terms {
            for bits in group.iter() {
                v.amplitudes_mut()[parse_bits(bits).expect("literal")] += c(T::lit(*w), T::zero());
            }
        }
        v
    };
    let s3 = 2.0 * 3f64.sqrt();
    [build(&[(&a, 0.5), (&b, -0.5)]), build(&[(&cc, 2.0 / s3), (&a, -1.0 / s3), (&b, -1.0 / s3)])]
}

/// Singlet basis of a K-qubit register.
///
/// The kernel of `S²` is found by diagonalising its `S_z = 0` block (all
/// singlets have equal numbers of 0s and 1s). The basis is then fixed
/// deterministically: Gram–Schmidt over the kernel projector's columns in
/// ascending computational order, each vector's first nonzero amplitude
/// positive. For K = 4 the result is replaced by [`four_qubit_logical_states`]
/// after checking both span the same plane.
pub fn dfs_basis<T: Real>(num_qubits: usize) -> Result<DfsBasis<T>> {
    let k = num_qubits;
    if k == 0 {
        return Err(Error::EmptyRegister);
    }
    if !k.is_multiple_of(2) {
        return Err(Error::NoSinglet(k));
    }
    if k > MAX_BASIS_QUBITS {
        return Err(Error::TooLarge { k, max: MAX_BASIS_QUBITS });
    }

    let sector: Vec<usize> = (0..1usize << k).filter(|x| x.count_ones() as usize == k / 2).collect();
    let n = sector.len();
    let mut position = vec![usize::MAX; 1 << k];
    for (p, &x) in sector.iter().enumerate() {
        position[x] = p;
    }

    let s2 = total_spin_squared::<T>(k)?;
    let mut block = vec![T::zero(); n * n];
    for (p, &x) in sector.iter().enumerate() {
        let (cols, vals) = s2.row(x);
        for (&col, v) in cols.iter().zip(vals) {
            let q = position[col];
            if q == usize::MAX {
                return Err(Error::InconsistentState("S² mixes S_z sectors".into()));
            }
            block[p * n + q] = v.re;
        }
    }

    let eig = symmetric_eigen(&block, n);
    let threshold = T::lit(T::KERNEL_THRESHOLD);
    let kernel: Vec<&[T]> = (0..n).filter(|&i| eig.values[i].abs() < threshold).map(|i| eig.vector(i)).collect();
    let dim = kernel.len();

    let expected = singlet_multiplicity(k as u32)?;
    if expected != dim.into() {
        return Err(Error::Basis(format!("S² kernel has dimension {dim}, expected {expected}")));
    }

    // Projector onto the kernel, restricted to the sector.
    let mut proj = vec![T::zero(); n * n];
    for v in &kernel {
        for r in 0..n {
            for col in 0..n {
                proj[r * n + col] += v[r] * v[col];
            }
        }
    }

    let keep = T::lit(T::CHAINED_TOL).sqrt();
    let mut chosen: Vec<Vec<T>> = Vec::with_capacity(dim);
    for x in 0..n {
        if chosen.len() == dim {
            break;
        }
        let mut w: Vec<T> = (0..n).map(|r| proj[r * n + x]).collect();
        // two passes of classical Gram–Schmidt
        for _ in 0..2 {
            for u in &chosen {
                let ip = dot(u, &w);
                w.iter_mut().zip(u).for_each(|(wi, ui)| *wi -= ip * *ui);
            }
        }
        let norm = dot(&w, &w).sqrt();
        if norm > keep {
            w.iter_mut().for_each(|wi| *wi /= norm);
            if let Some(first) = w.iter().find(|a| a.abs() > keep) {
                if *first < T::zero() {
                    w.iter_mut().for_each(|wi| *wi = -*wi);
                }
            }
            chosen.push(w);
        }
    }
    if chosen.len() != dim {
        return Err(Error::Basis("failed to orthonormalise the singlet kernel".into()));
    }

    let vectors = chosen
        .into_iter()
        .map(|w| {
            let mut amps = vec![czero(); 1 << k];
            for (p, &x) in sector.iter().enumerate() {
                amps[x] = c(w[p], T::zero());
            }
            StateVector::new(k, amps)
        })
        .collect::<Result<Vec<_>>>()?;
    let computed = DfsBasis { num_qubits: k, vectors };

    if k == 4 {
        let closed = four_qubit_logical_states::<T>();
        let tol = T::lit(T::CHAINED_TOL);
        for v in &closed {
            let leak = computed.leakage(v)?;
            if leak > tol {
                return Err(Error::Basis(format!("closed-form K=4 state lies outside the S² kernel (leakage {leak})")));
            }
        }
        return DfsBasis::from_vectors(4, closed.to_vec(), tol);
    }
    Ok(computed)
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + *x * *y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_qubit_singlet() {
        let b = dfs_basis::<f64>(2).unwrap();
        assert_eq!(b.dim(), 1);
        let r = 0.5f64.sqrt();
        let v = b.vectors()[0].amplitudes();
        assert!((v[1].re - r).abs() < 1e-14 && (v[2].re + r).abs() < 1e-14);
        assert_eq!(v[0], czero());
    }

    #[test]
    fn four_qubit_basis_is_closed_form() {
        let b = dfs_basis::<f64>(4).unwrap();
        let closed = four_qubit_logical_states::<f64>();
        assert_eq!(b.vectors(), &closed[..]);
        let a = b.vectors()[0].amplitudes();
        assert_eq!(a[0b0110].re, 0.5);
        assert_eq!(a[0b1010].re, -0.5);
    }

    #[test]
    fn six_qubit_dimension() {
        assert_eq!(dfs_basis::<f64>(6).unwrap().dim(), 5);
    }

    #[test]
    fn odd_register_has_no_singlets() {
        assert!(matches!(dfs_basis::<f64>(5), Err(Error::NoSinglet(5))));
        assert!(matches!(dfs_basis::<f64>(14), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn deterministic_across_calls() {
        assert_eq!(dfs_basis::<f64>(6).unwrap(), dfs_basis::<f64>(6).unwrap());
    }

    #[test]
    fn export_round_trip_is_bit_faithful() {
        let b = dfs_basis::<f64>(6).unwrap();
        let json = b.to_json();
        assert!(json.contains("\"dimension\": 5"));
        let back = DfsBasis::<f64>::from_json(&json).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn from_vectors_rejects_non_orthonormal() {
        let v = StateVector::<f64>::from_bits("01").unwrap();
        assert!(DfsBasis::from_vectors(2, vec![v.clone(), v], 1e-12).is_err());
    }
}
