//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All algorithms are written against [`Real`] so they run in `f32` or
//! `f64`; complex quantities are `num_complex::Complex<T>`.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal into this scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Converts a count or index.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Lossless widening used by serialization and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }

    /// Absolute tolerance clamped from below to a few ulps of this type.
    fn tol(x: f64) -> Self {
        let t = Self::lit(x);
        let floor = Self::epsilon() * Self::lit(4.0);
        if t < floor {
            floor
        } else {
            t
        }
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + LowerExp
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Complex number over the crate scalar.
pub type Cx<T> = Complex<T>;

/// `i^k` for any integer `k`, exact (no transcendental evaluation).
pub fn i_pow<T: Real>(k: i64) -> Cx<T> {
    match k.rem_euclid(4) {
        0 => Cx::new(T::one(), T::zero()),
        1 => Cx::new(T::zero(), T::one()),
        2 => Cx::new(-T::one(), T::zero()),
        _ => Cx::new(T::zero(), -T::one()),
    }
}

/// Multiplies by `i^k` using component swaps only, so the result is exact.
pub fn mul_i_pow<T: Real>(z: Cx<T>, k: i64) -> Cx<T> {
    match k.rem_euclid(4) {
        0 => z,
        1 => Cx::new(-z.im, z.re),
        2 => Cx::new(-z.re, -z.im),
        _ => Cx::new(z.im, -z.re),
    }
}

pub fn is_finite<T: Real>(z: Cx<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Ordering by real part, ties broken by imaginary part.
pub fn cmp_re_im<T: Real>(a: &Cx<T>, b: &Cx<T>) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(std::cmp::Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
}

/// Widens a complex value to `(re, im)` in `f64`.
pub fn to_pair<T: Real>(z: Cx<T>) -> [f64; 2] {
    [z.re.as_f64(), z.im.as_f64()]
}

pub fn from_pair<T: Real>(p: [f64; 2]) -> Cx<T> {
    Cx::new(T::lit(p[0]), T::lit(p[1]))
}
