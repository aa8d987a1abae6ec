//! Complex QR iteration for complex-symmetric tridiagonal matrices.
//!
//! The sweeps use complex orthogonal rotations (`c² + s² = 1`, transpose
//! rather than conjugate transpose), which keep the matrix tridiagonal and
//! symmetric, so each sweep is O(n). Deflation runs from the top, with the
//! Wilkinson-type shift taken from the leading unreduced 2×2 block.

use crate::error::{Error, Result};
use crate::scalar::{cmp_re_im, is_finite, Cx, Real};

use super::operator::TridiagOperator;

/// Total sweep budget per matrix dimension.
pub const SWEEPS_PER_DIM: usize = 60;

/// Every eigenvalue of the symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `off` (length `diag.len() − 1`), unordered.
pub fn complex_tridiag_eigenvalues<T: Real>(diag: &[Cx<T>], off: &[Cx<T>]) -> Result<Vec<Cx<T>>> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if off.len() + 1 != n {
        return Err(Error::InvalidInput(format!(
            "off-diagonal length {} does not match dimension {n}",
            off.len()
        )));
    }
    let zero = Cx::new(T::zero(), T::zero());
    let one = Cx::new(T::one(), T::zero());
    let two = Cx::new(T::lit(2.0), T::zero());
    let eps = T::epsilon();

    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(zero);

    let cap = SWEEPS_PER_DIM * n;
    let mut sweeps = 0usize;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].norm() + d[m + 1].norm();
                if e[m].norm() <= eps * dd || e[m] == zero {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > cap {
                return Err(Error::QrNoConvergence {
                    stuck_index: l,
                    found: l,
                    partial: d[..l]
                        .iter()
                        .map(|z| [z.re.as_f64(), z.im.as_f64()])
                        .collect(),
                });
            }
            // shift from the leading 2×2 block
            let mut g = (d[l + 1] - d[l]) / (e[l] * two);
            let mut r = (g * g + one).sqrt();
            let gr = if (g + r).norm() >= (g - r).norm() {
                g + r
            } else {
                g - r
            };
            g = d[m] - d[l] + e[l] / gr;

            let mut s = one;
            let mut c = one;
            let mut p = zero;
            let mut deflated_early = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = (f * f + g * g).sqrt();
                e[i + 1] = r;
                if r == zero {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = zero;
                    deflated_early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + c * b * two;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated_early {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = zero;
            if !is_finite(d[l]) || !is_finite(g) {
                return Err(Error::QrNoConvergence {
                    stuck_index: l,
                    found: l,
                    partial: d[..l]
                        .iter()
                        .map(|z| [z.re.as_f64(), z.im.as_f64()])
                        .collect(),
                });
            }
        }
    }
    Ok(d)
}

/// The `count` eigenvalues of smallest real part, sorted by real part
/// (ties by imaginary part).
pub fn eig_complex_tridiag<T: Real>(
    diag: &[Cx<T>],
    off: Cx<T>,
    count: usize,
) -> Result<Vec<Cx<T>>> {
    if count > diag.len() {
        return Err(Error::InvalidInput(format!(
            "requested {count} eigenvalues of a {}x{} matrix",
            diag.len(),
            diag.len()
        )));
    }
    let offs = vec![off; diag.len().saturating_sub(1)];
    let mut all = complex_tridiag_eigenvalues(diag, &offs)?;
    all.sort_by(cmp_re_im);
    all.truncate(count);
    Ok(all)
}

/// The `count` eigenvalues of largest real part, sorted ascending.
pub fn eig_complex_tridiag_top<T: Real>(
    diag: &[Cx<T>],
    off: Cx<T>,
    count: usize,
) -> Result<Vec<Cx<T>>> {
    if count > diag.len() {
        return Err(Error::InvalidInput(format!(
            "requested {count} eigenvalues of a {}x{} matrix",
            diag.len(),
            diag.len()
        )));
    }
    let offs = vec![off; diag.len().saturating_sub(1)];
    let mut all = complex_tridiag_eigenvalues(diag, &offs)?;
    all.sort_by(cmp_re_im);
    Ok(all.split_off(all.len() - count))
}

impl<T: Real> TridiagOperator<T> {
    /// Lowest `count` eigenvalues by complex QR.
    pub fn qr_eigenvalues(&self, count: usize) -> Result<Vec<Cx<T>>> {
        eig_complex_tridiag(&self.diag, Cx::new(self.off, T::zero()), count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::sturm::eig_sym_tridiag;

    fn c(re: f64, im: f64) -> Cx<f64> {
        Cx::new(re, im)
    }

    #[test]
    fn diagonal_input() {
        let ev = eig_complex_tridiag(&[c(1.0, 1.0), c(2.0, 0.0)], c(0.0, 0.0), 2).unwrap();
        assert_eq!(ev, vec![c(1.0, 1.0), c(2.0, 0.0)]);
    }

    #[test]
    fn two_by_two_analytic() {
        let ev = eig_complex_tridiag(&[c(0.0, 0.0), c(0.0, 0.0)], c(1.0, 0.0), 2).unwrap();
        assert!((ev[0] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((ev[1] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn complex_two_by_two_matches_characteristic_roots() {
        let (a, b, o) = (c(1.0, 0.5), c(-0.3, 2.0), c(0.7, -0.2));
        let ev = eig_complex_tridiag(&[a, b], o, 2).unwrap();
        let tr = a + b;
        let det = a * b - o * o;
        for l in ev {
            assert!((l * l - tr * l + det).norm() < 1e-13);
        }
    }

    #[test]
    fn real_symmetric_matches_sturm() {
        let n = 300;
        let diag: Vec<f64> = (0..n)
            .map(|k| ((k * 37 % 101) as f64) * 0.05 + 2.0)
            .collect();
        let off = -0.8;
        let sturm = eig_sym_tridiag(&diag, off, n).unwrap();
        let cd: Vec<_> = diag.iter().map(|&x| c(x, 0.0)).collect();
        let qr = eig_complex_tridiag(&cd, c(off, 0.0), n).unwrap();
        for (s, q) in sturm.iter().zip(&qr) {
            assert!((q - c(*s, 0.0)).norm() < 1e-10, "{s} vs {q}");
        }
    }

    #[test]
    fn negation_is_exact() {
        let n = 200;
        let diag: Vec<Cx<f64>> = (0..n)
            .map(|k| c(2.0 + (k as f64 * 0.37).sin(), 0.3 * (k as f64 * 0.11).cos()))
            .collect();
        let off = c(-1.0, 0.0);
        let a = eig_complex_tridiag(&diag, off, n).unwrap();
        let neg: Vec<_> = diag.iter().map(|d| -d).collect();
        let mut b = eig_complex_tridiag(&neg, -off, n).unwrap();
        b.reverse();
        for (x, y) in a.iter().zip(&b) {
            assert!((x + y).norm() < 1e-12);
        }
    }

    #[test]
    fn count_too_large() {
        assert!(eig_complex_tridiag(&[c(1.0, 0.0)], c(0.0, 0.0), 2).is_err());
    }
}
