use crate::error::{Error, Result};
use crate::potential::Hamiltonian;
use crate::scalar::{Cx, Real};

use super::contour::{Contour, MIN_POINTS};

/// Minimum distance between a potential singularity and an interior sample.
pub const CONTOUR_POLE_TOLERANCE: f64 = 1e-9;

/// Three-point finite-difference form of `−(1/2m) d²/dt² + V(z(t))` on the
/// interior samples of a contour, Dirichlet at both ends.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagOperator<T> {
    /// Interior diagonal, length `n_points − 2`.
    pub diag: Vec<Cx<T>>,
    /// Constant sub/super diagonal `−1/(2 m h²)`.
    pub off: T,
    pub contour: Contour<T>,
}

impl<T: Real> TridiagOperator<T> {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn step(&self) -> T {
        self.contour.step()
    }

    /// Real diagonal when every entry has zero imaginary part.
    pub fn real_diag(&self) -> Option<Vec<T>> {
        self.diag
            .iter()
            .map(|d| (d.im == T::zero()).then_some(d.re))
            .collect()
    }

    /// `−self`, entrywise.
    pub fn negated(&self) -> Self {
        Self {
            diag: self.diag.iter().map(|d| -d).collect(),
            off: -self.off,
            contour: self.contour,
        }
    }

    /// `(A x)_k` on the interior.
    pub fn apply(&self, x: &[Cx<T>]) -> Vec<Cx<T>> {
        let n = self.dim();
        let off = Cx::new(self.off, T::zero());
        (0..n)
            .map(|k| {
                let mut y = self.diag[k] * x[k];
                if k > 0 {
                    y = y + off * x[k - 1];
                }
                if k + 1 < n {
                    y = y + off * x[k + 1];
                }
                y
            })
            .collect()
    }

    /// Infinity norm of the matrix.
    pub fn norm_inf(&self) -> T {
        let two_off = self.off.abs() + self.off.abs();
        self.diag
            .iter()
            .map(|d| d.norm() + two_off)
            .fold(T::zero(), T::max)
    }
}

/// Builds the finite-difference operator of `h` on contour `c`.
///
/// Endpoint samples carry the Dirichlet condition and are never evaluated,
/// so a singularity exactly at an endpoint is allowed.
pub fn discretize<T: Real>(h: &Hamiltonian<T>, c: &Contour<T>) -> Result<TridiagOperator<T>> {
    if c.n_points < MIN_POINTS {
        return Err(Error::ContourTooCoarse {
            n_points: c.n_points,
        });
    }
    let step = c.step();
    let m = h.mass();
    let kinetic = T::one() / (m * step * step);
    let off = -T::one() / (T::lit(2.0) * m * step * step);
    let pole_tol = T::tol(CONTOUR_POLE_TOLERANCE);
    let diag = (1..c.n_points - 1)
        .map(|k| {
            let z = c.point(k);
            if let Some(d) = h.potential.singularity_distance(z) {
                if d < pole_tol {
                    return Err(Error::PoleOnContour {
                        sample: k,
                        distance: d.as_f64(),
                    });
                }
            }
            Ok(h.potential.eval(z)? + kinetic)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TridiagOperator {
        diag,
        off,
        contour: *c,
    })
}
