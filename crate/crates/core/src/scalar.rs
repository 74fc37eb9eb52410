// Copyright 2026 The exchange-dfs Authors
// SPDX-License-Identifier: Apache-2.0

//! Scalar abstraction shared by every numerical module.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar the operator algebra is generic over.
///
/// Implemented for `f32` and `f64`. The associated constants are the default
/// tolerances for that precision; every public check also takes an explicit
/// tolerance so callers can override them.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance for identities between operators with integer/half-integer entries.
    const EXACT_TOL: f64;
    /// Tolerance for chained floating-point constructions.
    const CHAINED_TOL: f64;
    /// Eigenvalues of S² below this are treated as zero.
    const KERNEL_THRESHOLD: f64;

    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EXACT_TOL: f64 = 1e-12;
    const CHAINED_TOL: f64 = 1e-10;
    const KERNEL_THRESHOLD: f64 = 1e-8;
}

impl Real for f32 {
    const EXACT_TOL: f64 = 1e-5;
    const CHAINED_TOL: f64 = 1e-4;
    const KERNEL_THRESHOLD: f64 = 1e-2;
}

/// Complex amplitude over a [`Real`] scalar.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn czero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

#[inline]
pub(crate) fn cone<T: Real>() -> C<T> {
    Complex::new(T::one(), T::zero())
}
