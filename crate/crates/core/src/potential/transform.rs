//! Closed-form maps on the term algebra: imaginary rotation of the
//! coordinate, the metric-operator series rescaling, mass and coupling
//! sign flips, and the Hermitian-partner pipeline built from them.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::{mul_i_pow, Cx, Real};

use super::expr::{default_symmetric_grid, PotentialExpr};
use super::hamiltonian::Hamiltonian;
use super::term::{PotentialTerm, TermShape};

/// Direction of the substitution `x → ±i y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationSign {
    Plus,
    Minus,
}

impl RotationSign {
    /// Exponent `s` with `±i = i^s`.
    fn quarter_turns(self) -> i64 {
        match self {
            RotationSign::Plus => 1,
            RotationSign::Minus => -1,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            RotationSign::Plus => RotationSign::Minus,
            RotationSign::Minus => RotationSign::Plus,
        }
    }
}

/// A named transformation applicable to a Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformSpec<T> {
    RotatePlus,
    RotateMinus,
    EtaSeries(T),
    MassFlip,
    CouplingFlip(usize),
}

impl<T: Real> TransformSpec<T> {
    /// Rotations act on the potential only; the kinetic term is left for
    /// the caller (see [`hermitian_partner`]).
    pub fn apply(&self, h: &Hamiltonian<T>) -> Result<Hamiltonian<T>> {
        match *self {
            TransformSpec::RotatePlus => Hamiltonian::new(
                h.mass(),
                rotate_potential(&h.potential, RotationSign::Plus)?,
            ),
            TransformSpec::RotateMinus => Hamiltonian::new(
                h.mass(),
                rotate_potential(&h.potential, RotationSign::Minus)?,
            ),
            TransformSpec::EtaSeries(beta) => {
                Hamiltonian::new(h.mass(), eta_transform(&h.potential, beta)?)
            }
            TransformSpec::MassFlip => Ok(mass_flip(h)),
            TransformSpec::CouplingFlip(i) => {
                Hamiltonian::new(h.mass(), coupling_flip(&h.potential, i)?)
            }
        }
    }
}

/// Substitutes `x → sign·i·y` term by term, exactly.
///
/// `(σy − a)^k = σ^k (y − a/σ)^k`, `sech(σu) = sec(u)` and `sec(σu) = sech(u)`
/// for `σ = ±i`. Integer powers of `ix` become shifted powers about the
/// origin; non-integer powers are rejected with the composite phase in the
/// message, since the result leaves the branch structure of the algebra.
pub fn rotate_potential<T: Real>(
    expr: &PotentialExpr<T>,
    sign: RotationSign,
) -> Result<PotentialExpr<T>> {
    let s = sign.quarter_turns();
    let terms = expr
        .terms
        .iter()
        .map(|t| {
            // a/σ = −σ·a = i^{2+s}·a
            let new_shift = |a: Cx<T>| mul_i_pow(a, 2 + s);
            let shape = match t.shape {
                TermShape::ShiftedPower {
                    coef,
                    shift,
                    exponent,
                } => TermShape::ShiftedPower {
                    coef: mul_i_pow(coef, s * i64::from(exponent)),
                    shift: new_shift(shift),
                    exponent,
                },
                TermShape::IxPower { coef, nu } => {
                    if nu.fract() != T::zero() {
                        // i·σ = i^{1+s}: 1 for Minus, −1 for Plus
                        let phase = T::PI() * nu * T::lit((1 + s) as f64) / T::lit(2.0);
                        return Err(Error::BranchAmbiguity(format!(
                            "(ix)^{nu} under x -> {}iy gives -g·(e^{{i{:.6}}}·y)^{nu}; \
                             y^{nu} has a branch cut on y < 0",
                            if s > 0 { "+" } else { "-" },
                            phase.as_f64(),
                        )));
                    }
                    let n = nu.to_i32().ok_or_else(|| {
                        Error::InvalidInput(format!("exponent {nu} out of range"))
                    })?;
                    TermShape::ShiftedPower {
                        coef: mul_i_pow(Cx::new(-coef, T::zero()), (1 + s) * i64::from(n)),
                        shift: Cx::new(T::zero(), T::zero()),
                        exponent: n,
                    }
                }
                TermShape::SechSquared { coef, shift } => TermShape::SecSquared {
                    coef,
                    shift: new_shift(shift),
                },
                TermShape::SecSquared { coef, shift } => TermShape::SechSquared {
                    coef,
                    shift: new_shift(shift),
                },
            };
            Ok(PotentialTerm {
                shape,
                mass_scaling: t.mass_scaling,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PotentialExpr::new(terms))
}

/// `A_n → A_n e^{−iβn}`: the action of `exp(−iβ x∂x)` on a power series.
pub fn eta_series<T: Real>(coeffs: &[Cx<T>], beta: T) -> Vec<Cx<T>> {
    coeffs
        .iter()
        .enumerate()
        .map(|(n, &a)| a * Cx::from_polar(T::one(), -beta * T::from_count(n)))
        .collect()
}

/// Applies [`eta_series`] to a potential made of powers about the origin,
/// term by term so mass tags survive.
pub fn eta_transform<T: Real>(expr: &PotentialExpr<T>, beta: T) -> Result<PotentialExpr<T>> {
    if !beta.is_finite() {
        return Err(Error::InvalidInput("eta beta must be finite".into()));
    }
    let canon = expr.canonical();
    let terms = canon
        .terms
        .iter()
        .map(|t| match t.shape {
            TermShape::ShiftedPower {
                coef,
                shift,
                exponent,
            } if exponent >= 0 && shift == Cx::new(T::zero(), T::zero()) => Ok(PotentialTerm {
                shape: TermShape::ShiftedPower {
                    coef: coef * Cx::from_polar(T::one(), -beta * T::lit(f64::from(exponent))),
                    shift,
                    exponent,
                },
                mass_scaling: t.mass_scaling,
            }),
            other => Err(Error::NotPowerSeries(format!("{other:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PotentialExpr::new(terms))
}

/// `m → −m`, rewriting every mass-dependent coefficient at the new mass.
///
/// For a potential whose terms all scale with `m` or `1/m` the result is
/// exactly `−H`.
pub fn mass_flip<T: Real>(h: &Hamiltonian<T>) -> Hamiltonian<T> {
    let terms = h
        .potential
        .terms
        .iter()
        .map(|t| {
            if t.mass_scaling.flips_with_mass() {
                t.negated()
            } else {
                *t
            }
        })
        .collect();
    Hamiltonian::new(-h.mass(), PotentialExpr::new(terms)).expect("negated nonzero mass is valid")
}

/// Negates the coefficient of one term.
pub fn coupling_flip<T: Real>(
    expr: &PotentialExpr<T>,
    term_index: usize,
) -> Result<PotentialExpr<T>> {
    if term_index >= expr.len() {
        return Err(Error::IndexOutOfRange {
            index: term_index,
            len: expr.len(),
        });
    }
    let mut out = expr.clone();
    out.terms[term_index] = out.terms[term_index].negated();
    Ok(out)
}

/// Checks recorded while building a Hermitian partner.
#[derive(Debug, Clone, PartialEq)]
pub struct PartnerDiagnostics<T> {
    pub pt_deviation: T,
    pub reality_deviation: T,
    /// Declared poles of the partner potential on the real axis.
    pub real_axis_poles: Vec<T>,
}

pub const PARTNER_REALITY_TOL: f64 = 1e-9;

/// Hermitian partner of a PT-symmetric Hamiltonian.
///
/// The coordinate is rotated, `x → ±iy`, which turns `p_x²/2m₊` into
/// `p_y²/2m₋`; the result carries the negated mass with the rotated
/// potential values unchanged (coefficients re-expressed at `m₋`).
pub fn hermitian_partner<T: Real>(
    h: &Hamiltonian<T>,
    sign: RotationSign,
) -> Result<(Hamiltonian<T>, PartnerDiagnostics<T>)> {
    let tol = T::tol(PARTNER_REALITY_TOL);
    let grid = default_symmetric_grid::<T>();
    let pt = h.potential.check_pt_symmetry(&grid, tol)?;
    if !pt.holds {
        return Err(Error::NotPtSymmetric {
            max_deviation: pt.max_deviation.as_f64(),
        });
    }
    let rotated = rotate_potential(&h.potential, sign)?;
    let partner = Hamiltonian::new(h.mass(), rotated)?.with_negated_mass();

    let lo = grid.iter().copied().fold(T::infinity(), Float::min);
    let hi = grid.iter().copied().fold(T::neg_infinity(), Float::max);
    let singular = partner
        .potential
        .real_axis_singularities(lo - T::one(), hi + T::one());
    let safe: Vec<T> = grid
        .iter()
        .copied()
        .filter(|&y| singular.iter().all(|&p| (y - p).abs() > T::lit(1e-6)))
        .collect();
    let reality = partner.potential.check_real_on_axis(&safe, tol)?;
    if !reality.holds {
        return Err(Error::RotatedNotReal {
            max_deviation: reality.max_deviation.as_f64(),
        });
    }
    let poles = partner
        .potential
        .real_axis_poles(T::neg_infinity(), T::infinity());
    Ok((
        partner,
        PartnerDiagnostics {
            pt_deviation: pt.max_deviation,
            reality_deviation: reality.max_deviation,
            real_axis_poles: poles,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::families;
    use crate::potential::term::MassScaling;

    fn c(re: f64, im: f64) -> Cx<f64> {
        Cx::new(re, im)
    }

    fn shape(e: &PotentialExpr<f64>, i: usize) -> TermShape<f64> {
        e.terms[i].shape
    }

    #[test]
    fn shifted_square_rotates_to_inverted_real_square() {
        let e = PotentialExpr::new(vec![PotentialTerm::shifted_power(
            c(1.0, 0.0),
            c(0.0, 1.0),
            2,
        )]);
        let r = rotate_potential(&e, RotationSign::Minus).unwrap();
        assert_eq!(
            shape(&r, 0),
            TermShape::ShiftedPower {
                coef: c(-1.0, 0.0),
                shift: c(-1.0, 0.0),
                exponent: 2
            }
        );
    }

    #[test]
    fn ix_cube_rotates_to_negative_cube() {
        let e = PotentialExpr::new(vec![PotentialTerm::ix_power(1.0, 3.0)]);
        let r = rotate_potential(&e, RotationSign::Minus).unwrap();
        assert_eq!(
            shape(&r, 0),
            TermShape::ShiftedPower {
                coef: c(-1.0, 0.0),
                shift: c(0.0, 0.0),
                exponent: 3
            }
        );
        let plus = rotate_potential(&e, RotationSign::Plus).unwrap();
        // −g(−y)^3 = +g y^3
        assert_eq!(
            shape(&plus, 0),
            TermShape::ShiftedPower {
                coef: c(1.0, 0.0),
                shift: c(0.0, 0.0),
                exponent: 3
            }
        );
    }

    #[test]
    fn fractional_ix_power_is_ambiguous() {
        let e = PotentialExpr::new(vec![PotentialTerm::ix_power(1.0, 2.5)]);
        assert!(matches!(
            rotate_potential(&e, RotationSign::Plus),
            Err(Error::BranchAmbiguity(_))
        ));
    }

    #[test]
    fn sech_rotates_to_sec_with_real_shift() {
        let a = 2.0;
        let e = PotentialExpr::new(vec![PotentialTerm::sech_squared(c(-a, 0.0), c(0.0, 0.7))]);
        let r = rotate_potential(&e, RotationSign::Minus).unwrap();
        assert_eq!(
            shape(&r, 0),
            TermShape::SecSquared {
                coef: c(-a, 0.0),
                shift: c(-0.7, 0.0)
            }
        );
        // value check: sech²(−iy − 0.7i) = sec²(y + 0.7)
        let y = 0.3;
        let lhs = e.eval(c(0.0, -y)).unwrap();
        let rhs = r.eval(c(y, 0.0)).unwrap();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn empty_rotates_to_empty() {
        let e = PotentialExpr::<f64>::zero();
        assert!(rotate_potential(&e, RotationSign::Plus).unwrap().is_empty());
    }

    #[test]
    fn rotation_is_substitution() {
        let e = PotentialExpr::new(vec![
            PotentialTerm::shifted_power(c(0.4, -1.1), c(0.3, 0.8), 3),
            PotentialTerm::shifted_power(c(-0.2, 0.5), c(-0.6, 0.1), -2),
            PotentialTerm::sec_squared(c(1.5, 0.2), c(0.1, 0.3)),
        ]);
        for sign in [RotationSign::Plus, RotationSign::Minus] {
            let r = rotate_potential(&e, sign).unwrap();
            let sigma = if sign == RotationSign::Plus {
                c(0.0, 1.0)
            } else {
                c(0.0, -1.0)
            };
            for y in [-1.3, -0.2, 0.45, 1.7] {
                let lhs = e.eval(sigma * y).unwrap();
                let rhs = r.eval(c(y, 0.0)).unwrap();
                assert!(
                    (lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()),
                    "{sign:?} y={y}"
                );
            }
        }
    }

    #[test]
    fn eta_examples() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let out = eta_series(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], half_pi);
        assert!((out[2] - c(-1.0, 0.0)).norm() < 1e-15);
        let out = eta_series(&[c(0.0, 0.0), c(1.0, 0.0)], half_pi);
        assert!((out[1] - c(0.0, -1.0)).norm() < 1e-15);
        let a = vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.25, 0.0)];
        assert_eq!(eta_series(&a, 0.0), a);
    }

    #[test]
    fn eta_rejects_shifted_terms() {
        let e = PotentialExpr::new(vec![PotentialTerm::shifted_power(
            c(1.0, 0.0),
            c(0.0, 1.0),
            2,
        )]);
        assert!(matches!(
            eta_transform(&e, 0.3),
            Err(Error::NotPowerSeries(_))
        ));
    }

    #[test]
    fn mass_flip_of_oscillator() {
        let h = families::harmonic(1.0, 2.0).unwrap();
        let f = mass_flip(&h);
        assert_eq!(f.mass(), -1.0);
        assert_eq!(f.potential.eval(c(1.0, 0.0)).unwrap(), c(-2.0, 0.0));
        assert_eq!(mass_flip(&f), h);
    }

    #[test]
    fn mass_flip_leaves_independent_terms() {
        let h = Hamiltonian::new(
            0.5,
            PotentialExpr::new(vec![
                PotentialTerm::ix_power(1.0, 3.0),
                PotentialTerm::shifted_power(c(2.0, 0.0), c(0.0, 0.0), 2)
                    .with_mass_scaling(MassScaling::Proportional),
            ]),
        )
        .unwrap();
        let f = mass_flip(&h);
        assert_eq!(f.potential.terms[0], h.potential.terms[0]);
        assert_eq!(f.potential.terms[1].coef(), c(-2.0, 0.0));
    }

    #[test]
    fn coupling_flip_behaviour() {
        let e = PotentialExpr::new(vec![PotentialTerm::sec_squared(c(-2.0, 0.0), c(0.0, 0.0))]);
        let f = coupling_flip(&e, 0).unwrap();
        assert_eq!(f.terms[0].coef(), c(2.0, 0.0));
        assert_eq!(coupling_flip(&f, 0).unwrap(), e);
        assert!(matches!(
            coupling_flip(&PotentialExpr::<f64>::zero(), 0),
            Err(Error::IndexOutOfRange { index: 0, len: 0 })
        ));
    }

    #[test]
    fn partner_of_regularized_shifted_oscillator() {
        let h = families::shifted_oscillator(0.5, 2.0, 1.0, 0.75).unwrap();
        let (p, diag) = hermitian_partner(&h, RotationSign::Minus).unwrap();
        assert_eq!(p.mass(), -0.5);
        // m₋ω²/2 (y+c)² + (α²−1/4)/(2m₋) /(y+c)² with m₋ = −1/2, ω = 2
        let g = 0.75_f64 * 0.75 - 0.25;
        for y in [-0.3, 0.8, 2.2] {
            let r = y + 1.0;
            let expected = -r * r - g / (r * r);
            let got = p.potential.eval(c(y, 0.0)).unwrap();
            assert!((got - c(expected, 0.0)).norm() < 1e-12);
        }
        assert_eq!(diag.real_axis_poles, vec![-1.0]);
        assert!(diag.reality_deviation < 1e-12);
    }

    #[test]
    fn partner_of_cubic_bender_boettcher() {
        let h = families::bender_boettcher(0.5, 1.0, 3.0).unwrap();
        let (p, _) = hermitian_partner(&h, RotationSign::Minus).unwrap();
        assert_eq!(p.mass(), -0.5);
        assert_eq!(p.potential.eval(c(2.0, 0.0)).unwrap(), c(-8.0, 0.0));
    }

    #[test]
    fn partner_of_free_particle() {
        let h = Hamiltonian::new(0.5, PotentialExpr::<f64>::zero()).unwrap();
        let (p, diag) = hermitian_partner(&h, RotationSign::Plus).unwrap();
        assert_eq!(p.mass(), -0.5);
        assert!(p.potential.is_empty());
        assert!(diag.real_axis_poles.is_empty());
    }

    #[test]
    fn partner_requires_pt_symmetry() {
        let h = Hamiltonian::new(
            0.5,
            PotentialExpr::new(vec![PotentialTerm::shifted_power(
                c(1.0, 0.0),
                c(0.0, 0.0),
                3,
            )]),
        )
        .unwrap();
        assert!(matches!(
            hermitian_partner(&h, RotationSign::Minus),
            Err(Error::NotPtSymmetric { .. })
        ));
    }
}
