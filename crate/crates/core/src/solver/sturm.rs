//! Sturm-sequence bisection for real symmetric tridiagonal matrices with a
//! constant off-diagonal.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Relative bracket width at which bisection stops.
pub const BISECTION_TOLERANCE: f64 = 1e-12;

/// Number of eigenvalues strictly below `x` (negative pivots of the
/// `LDLᵀ` factorization of `T − xI`).
pub fn sturm_count<T: Real>(diag: &[T], off: T, x: T) -> usize {
    let Some(&first) = diag.first() else {
        return 0;
    };
    let off2 = off * off;
    let guard = T::min_positive_value().sqrt() * (T::one() + off.abs());
    let mut count = 0;
    let mut q = first - x;
    if q < T::zero() {
        count += 1;
    }
    for &d in &diag[1..] {
        let q_safe = if q.abs() < guard {
            if q < T::zero() {
                -guard
            } else {
                guard
            }
        } else {
            q
        };
        q = (d - x) - off2 / q_safe;
        if q < T::zero() {
            count += 1;
        }
    }
    count
}

fn gershgorin<T: Real>(diag: &[T], off: T) -> (T, T) {
    let r = off.abs() + off.abs();
    let lo = diag.iter().copied().fold(T::infinity(), T::min) - r;
    let hi = diag.iter().copied().fold(T::neg_infinity(), T::max) + r;
    let pad = (hi - lo).abs() * T::lit(1e-8) + T::min_positive_value().sqrt();
    (lo - pad, hi + pad)
}

/// Eigenvalue with index `k` (ascending) bracketed in `[lo, hi]`.
fn bisect<T: Real>(diag: &[T], off: T, k: usize, mut lo: T, mut hi: T) -> T {
    let tol = T::tol(BISECTION_TOLERANCE);
    loop {
        let mid = lo + (hi - lo) / T::lit(2.0);
        if hi - lo <= tol * T::one().max(mid.abs()) || mid <= lo || mid >= hi {
            return mid;
        }
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Lowest `count` eigenvalues, ascending.
pub fn eig_sym_tridiag<T: Real>(diag: &[T], off: T, count: usize) -> Result<Vec<T>> {
    if count > diag.len() {
        return Err(Error::InvalidInput(format!(
            "requested {count} eigenvalues of a {}x{} matrix",
            diag.len(),
            diag.len()
        )));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let (lo, hi) = gershgorin(diag, off);
    let mut out = Vec::with_capacity(count);
    let mut floor = lo;
    for k in 0..count {
        let lam = bisect(diag, off, k, floor, hi);
        out.push(lam);
        floor = lam - (hi - lo) * T::epsilon();
    }
    Ok(out)
}

/// Highest `count` eigenvalues, ascending.
pub fn eig_sym_tridiag_top<T: Real>(diag: &[T], off: T, count: usize) -> Result<Vec<T>> {
    let neg: Vec<T> = diag.iter().map(|&d| -d).collect();
    let mut top: Vec<T> = eig_sym_tridiag(&neg, -off, count)?
        .into_iter()
        .map(|x| -x)
        .collect();
    top.reverse();
    Ok(top)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let ev = eig_sym_tridiag(&[2.0_f64, 2.0], -1.0, 2).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn toeplitz_three() {
        let ev = eig_sym_tridiag(&[2.0, 2.0, 2.0], -1.0, 3).unwrap();
        let s = std::f64::consts::SQRT_2;
        for (got, want) in ev.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn toeplitz_formula_large() {
        // eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 200;
        let ev = eig_sym_tridiag(&vec![2.0; n], -1.0, n).unwrap();
        for (k, got) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * (std::f64::consts::PI * (k + 1) as f64 / (n + 1) as f64).cos();
            assert!((got - want).abs() < 1e-11, "k={k}");
        }
    }

    #[test]
    fn top_eigenvalues() {
        let ev = eig_sym_tridiag_top(&[2.0_f64, 2.0, 2.0], -1.0, 2).unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-12);
        assert!((ev[1] - (2.0 + std::f64::consts::SQRT_2)).abs() < 1e-12);
    }

    #[test]
    fn diagonal_matrix() {
        let ev = eig_sym_tridiag(&[3.0_f64, -1.0, 2.0], 0.0, 3).unwrap();
        for (got, want) in ev.iter().zip([-1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn count_too_large() {
        assert!(eig_sym_tridiag(&[1.0], 0.0, 2).is_err());
    }

    #[test]
    fn single_precision() {
        let ev = eig_sym_tridiag(&[2.0_f32, 2.0], -1.0, 2).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-5 && (ev[1] - 3.0).abs() < 1e-5);
    }
}
