use crate::error::{Error, Result};
use crate::scalar::{i_pow, Cx, Real};

use super::term::{PotentialTerm, TermShape, POLE_TOLERANCE};

/// Sum of closed-form terms; the empty sum is the zero potential.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PotentialExpr<T> {
    pub terms: Vec<PotentialTerm<T>>,
}

/// Outcome of a pointwise check over a sample grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCheck<T> {
    pub holds: bool,
    pub max_deviation: T,
}

impl<T: Real> PotentialExpr<T> {
    pub fn new(terms: Vec<PotentialTerm<T>>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn with(mut self, term: PotentialTerm<T>) -> Self {
        self.terms.push(term);
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, z: Cx<T>) -> Result<Cx<T>> {
        self.terms
            .iter()
            .try_fold(Cx::new(T::zero(), T::zero()), |acc, t| Ok(acc + t.eval(z)?))
    }

    pub fn eval_real(&self, x: T) -> Result<Cx<T>> {
        self.eval(Cx::new(x, T::zero()))
    }

    /// Declared poles (negative-exponent shifted powers).
    pub fn poles(&self) -> Vec<Cx<T>> {
        self.terms.iter().filter_map(|t| t.pole()).collect()
    }

    /// Declared poles lying on the real axis within `[lo, hi]`, ascending.
    pub fn real_axis_poles(&self, lo: T, hi: T) -> Vec<T> {
        let eps = T::tol(POLE_TOLERANCE);
        let mut out: Vec<T> = self
            .poles()
            .into_iter()
            .filter(|p| p.im.abs() <= eps && p.re >= lo && p.re <= hi)
            .map(|p| p.re)
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite pole"));
        out.dedup_by(|a, b| (*a - *b).abs() <= eps);
        out
    }

    /// Every real-axis singularity in `[lo, hi]`, including the periodic
    /// ones of `sec²`/`sech²` terms.
    pub fn real_axis_singularities(&self, lo: T, hi: T) -> Vec<T> {
        let mut out: Vec<T> = self
            .terms
            .iter()
            .flat_map(|t| t.real_singularities(lo, hi))
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite pole"));
        out
    }

    /// Distance from `z` to the nearest singularity of any term.
    pub fn singularity_distance(&self, z: Cx<T>) -> Option<T> {
        self.terms
            .iter()
            .filter_map(|t| t.nearest_singularity(z))
            .map(|p| (z - p).norm())
            .fold(None, |acc, d| match acc {
                Some(a) if a <= d => Some(a),
                _ => Some(d),
            })
    }

    /// `V(x) = conj(V(−x))` sampled on a grid symmetric about the origin.
    pub fn check_pt_symmetry(&self, grid: &[T], tol: T) -> Result<GridCheck<T>> {
        if grid.is_empty() {
            return Err(Error::InvalidInput("empty grid".into()));
        }
        let sym_tol = T::tol(1e-12);
        for &x in grid {
            if !grid
                .iter()
                .any(|&y| (x + y).abs() <= sym_tol * (T::one() + x.abs()))
            {
                return Err(Error::InvalidInput(format!(
                    "grid not symmetric about 0: {x} has no mirror point"
                )));
            }
        }
        let mut worst = T::zero();
        for &x in grid {
            let dev = (self.eval_real(x)? - self.eval_real(-x)?.conj()).norm();
            worst = worst.max(dev);
        }
        Ok(GridCheck {
            holds: worst <= tol,
            max_deviation: worst,
        })
    }

    /// `Im V(y) = 0` sampled on a real grid.
    pub fn check_real_on_axis(&self, grid: &[T], tol: T) -> Result<GridCheck<T>> {
        if grid.is_empty() {
            return Err(Error::InvalidInput("empty grid".into()));
        }
        let mut worst = T::zero();
        for &y in grid {
            worst = worst.max(self.eval_real(y)?.im.abs());
        }
        Ok(GridCheck {
            holds: worst <= tol,
            max_deviation: worst,
        })
    }

    /// Power series `Σ A_n x^n` as shifted powers about the origin.
    /// Zero coefficients are dropped.
    pub fn from_power_series(coeffs: &[Cx<T>]) -> Self {
        let zero = Cx::new(T::zero(), T::zero());
        Self::new(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != zero)
                .map(|(n, &c)| {
                    PotentialTerm::shifted_power(
                        c,
                        zero,
                        i32::try_from(n).expect("degree fits i32"),
                    )
                })
                .collect(),
        )
    }

    /// Coefficient list of a potential made only of non-negative integer
    /// powers about the origin (integer `(ix)^ν` terms included).
    pub fn to_power_series(&self) -> Result<Vec<Cx<T>>> {
        let canon = self.canonical();
        let mut coeffs: Vec<Cx<T>> = Vec::new();
        for t in &canon.terms {
            match t.shape {
                TermShape::ShiftedPower {
                    coef,
                    shift,
                    exponent,
                } if exponent >= 0 && shift == Cx::new(T::zero(), T::zero()) => {
                    let n = exponent as usize;
                    if coeffs.len() <= n {
                        coeffs.resize(n + 1, Cx::new(T::zero(), T::zero()));
                    }
                    coeffs[n] = coeffs[n] + coef;
                }
                other => {
                    return Err(Error::NotPowerSeries(format!("{other:?}")));
                }
            }
        }
        Ok(coeffs)
    }

    /// Canonical representation: integer-exponent `(ix)^ν` terms become
    /// the equivalent shifted power about the origin, and signed zeros are
    /// cleared. Term order is preserved.
    pub fn canonical(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let shape = match t.shape {
                    TermShape::IxPower { coef, nu }
                        if nu.fract() == T::zero() && nu.abs() < T::lit(1e6) =>
                    {
                        let n = nu.to_i32().expect("integer exponent");
                        TermShape::ShiftedPower {
                            coef: i_pow::<T>(i64::from(n)) * -coef,
                            shift: Cx::new(T::zero(), T::zero()),
                            exponent: n,
                        }
                    }
                    s => s,
                };
                PotentialTerm {
                    shape: clear_signed_zeros(shape),
                    mass_scaling: t.mass_scaling,
                }
            })
            .collect();
        Self { terms }
    }
}

fn unsign<T: Real>(x: T) -> T {
    if x == T::zero() {
        T::zero()
    } else {
        x
    }
}

fn unsign_c<T: Real>(z: Cx<T>) -> Cx<T> {
    Cx::new(unsign(z.re), unsign(z.im))
}

fn clear_signed_zeros<T: Real>(s: TermShape<T>) -> TermShape<T> {
    match s {
        TermShape::ShiftedPower {
            coef,
            shift,
            exponent,
        } => TermShape::ShiftedPower {
            coef: unsign_c(coef),
            shift: unsign_c(shift),
            exponent,
        },
        TermShape::IxPower { coef, nu } => TermShape::IxPower {
            coef: unsign(coef),
            nu,
        },
        TermShape::SechSquared { coef, shift } => TermShape::SechSquared {
            coef: unsign_c(coef),
            shift: unsign_c(shift),
        },
        TermShape::SecSquared { coef, shift } => TermShape::SecSquared {
            coef: unsign_c(coef),
            shift: unsign_c(shift),
        },
    }
}

/// Sum of the term values at `z`.
pub fn eval_potential<T: Real>(expr: &PotentialExpr<T>, z: Cx<T>) -> Result<Cx<T>> {
    expr.eval(z)
}

pub fn check_pt_symmetry<T: Real>(
    expr: &PotentialExpr<T>,
    grid: &[T],
    tol: T,
) -> Result<GridCheck<T>> {
    expr.check_pt_symmetry(grid, tol)
}

pub fn check_real_on_axis<T: Real>(
    expr: &PotentialExpr<T>,
    grid: &[T],
    tol: T,
) -> Result<GridCheck<T>> {
    expr.check_real_on_axis(grid, tol)
}

/// Symmetric sample grid used when no grid is supplied. Offsets avoid
/// integers and simple fractions so common pole locations are not hit.
pub fn default_symmetric_grid<T: Real>() -> Vec<T> {
    let mut g = Vec::with_capacity(24);
    for k in 0..12 {
        let x = T::lit(0.137 + 0.271 * f64::from(k));
        g.push(-x);
        g.push(x);
    }
    g
}
