use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_finite, mul_i_pow, Cx, Real};

/// Absolute distance below which an evaluation point counts as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// How a term's coefficient depends on the (signed) mass.
///
/// The stored coefficient is always the value at the Hamiltonian's current
/// mass; the tag only matters when the mass is flipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MassScaling {
    #[default]
    Independent,
    /// coefficient ∝ m
    Proportional,
    /// coefficient ∝ 1/m
    Inverse,
}

impl MassScaling {
    /// Whether negating the mass negates the coefficient.
    pub fn flips_with_mass(self) -> bool {
        !matches!(self, MassScaling::Independent)
    }
}

/// The four closed term shapes of the potential algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TermShape<T> {
    /// `coef · (x − shift)^exponent`; negative exponents declare a pole at `shift`.
    ShiftedPower {
        coef: Cx<T>,
        shift: Cx<T>,
        exponent: i32,
    },
    /// `−coef · (i x)^nu`, principal branch for non-integer `nu`.
    IxPower { coef: T, nu: T },
    /// `coef · sech²(x − shift)`
    SechSquared { coef: Cx<T>, shift: Cx<T> },
    /// `coef · sec²(x − shift)`
    SecSquared { coef: Cx<T>, shift: Cx<T> },
}

/// One additive term of a potential together with its mass dependence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialTerm<T> {
    pub shape: TermShape<T>,
    pub mass_scaling: MassScaling,
}

impl<T: Real> PotentialTerm<T> {
    pub fn new(shape: TermShape<T>) -> Self {
        Self {
            shape,
            mass_scaling: MassScaling::Independent,
        }
    }

    pub fn with_mass_scaling(mut self, scaling: MassScaling) -> Self {
        self.mass_scaling = scaling;
        self
    }

    pub fn shifted_power(coef: Cx<T>, shift: Cx<T>, exponent: i32) -> Self {
        Self::new(TermShape::ShiftedPower {
            coef,
            shift,
            exponent,
        })
    }

    pub fn ix_power(coef: T, nu: T) -> Self {
        Self::new(TermShape::IxPower { coef, nu })
    }

    pub fn sech_squared(coef: Cx<T>, shift: Cx<T>) -> Self {
        Self::new(TermShape::SechSquared { coef, shift })
    }

    pub fn sec_squared(coef: Cx<T>, shift: Cx<T>) -> Self {
        Self::new(TermShape::SecSquared { coef, shift })
    }

    /// Coefficient as a complex number (the `IxPower` coupling is real).
    pub fn coef(&self) -> Cx<T> {
        match self.shape {
            TermShape::ShiftedPower { coef, .. }
            | TermShape::SechSquared { coef, .. }
            | TermShape::SecSquared { coef, .. } => coef,
            TermShape::IxPower { coef, .. } => Cx::new(coef, T::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coef() == Cx::new(T::zero(), T::zero())
    }

    /// Same term with its coefficient negated.
    pub fn negated(mut self) -> Self {
        self.shape = match self.shape {
            TermShape::ShiftedPower {
                coef,
                shift,
                exponent,
            } => TermShape::ShiftedPower {
                coef: -coef,
                shift,
                exponent,
            },
            TermShape::IxPower { coef, nu } => TermShape::IxPower { coef: -coef, nu },
            TermShape::SechSquared { coef, shift } => TermShape::SechSquared { coef: -coef, shift },
            TermShape::SecSquared { coef, shift } => TermShape::SecSquared { coef: -coef, shift },
        };
        self
    }

    /// The declared pole of a negative-exponent shifted power.
    pub fn pole(&self) -> Option<Cx<T>> {
        match self.shape {
            TermShape::ShiftedPower {
                shift, exponent, ..
            } if exponent < 0 && !self.is_zero() => Some(shift),
            _ => None,
        }
    }

    /// Nearest singularity of this term to `z`, covering the periodic poles
    /// of `sech²` and `sec²` as well as declared power poles.
    pub fn nearest_singularity(&self, z: Cx<T>) -> Option<Cx<T>> {
        if self.is_zero() {
            return None;
        }
        let half_pi = T::FRAC_PI_2();
        let pi = T::PI();
        match self.shape {
            TermShape::ShiftedPower { .. } => self.pole(),
            TermShape::IxPower { .. } => None,
            TermShape::SechSquared { shift, .. } => {
                let w = z - shift;
                let k = ((w.im - half_pi) / pi).round();
                Some(shift + Cx::new(T::zero(), half_pi + k * pi))
            }
            TermShape::SecSquared { shift, .. } => {
                let w = z - shift;
                let k = ((w.re - half_pi) / pi).round();
                Some(shift + Cx::new(half_pi + k * pi, T::zero()))
            }
        }
    }

    /// Real-axis singularities of this term inside `[lo, hi]`.
    pub fn real_singularities(&self, lo: T, hi: T) -> Vec<T> {
        let eps = T::tol(POLE_TOLERANCE);
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        match self.shape {
            TermShape::ShiftedPower {
                shift, exponent, ..
            } => {
                if exponent < 0 && shift.im.abs() <= eps && shift.re >= lo && shift.re <= hi {
                    out.push(shift.re);
                }
            }
            TermShape::IxPower { .. } => {}
            TermShape::SechSquared { shift, .. } => {
                // poles at shift + i(π/2 + kπ); on the axis only for a matching Im shift
                let half_pi = T::FRAC_PI_2();
                let k = ((-shift.im - half_pi) / T::PI()).round();
                let off = shift.im + half_pi + k * T::PI();
                if off.abs() <= eps && shift.re >= lo && shift.re <= hi {
                    out.push(shift.re);
                }
            }
            TermShape::SecSquared { shift, .. } => {
                if shift.im.abs() <= eps {
                    let pi = T::PI();
                    let half_pi = T::FRAC_PI_2();
                    let mut k = ((lo - shift.re - half_pi) / pi).floor();
                    loop {
                        let x = shift.re + half_pi + k * pi;
                        if x > hi {
                            break;
                        }
                        if x >= lo {
                            out.push(x);
                        }
                        k = k + T::one();
                    }
                }
            }
        }
        out
    }

    /// Value of the term at `z`.
    pub fn eval(&self, z: Cx<T>) -> Result<Cx<T>> {
        if self.is_zero() {
            return Ok(Cx::new(T::zero(), T::zero()));
        }
        if let Some(p) = self.nearest_singularity(z) {
            let d = (z - p).norm();
            if d < T::tol(POLE_TOLERANCE) {
                return Err(Error::PoleProximity {
                    pole_re: p.re.as_f64(),
                    pole_im: p.im.as_f64(),
                    distance: d.as_f64(),
                });
            }
        }
        let v = match self.shape {
            TermShape::ShiftedPower {
                coef,
                shift,
                exponent,
            } => coef * (z - shift).powi(exponent),
            TermShape::IxPower { coef, nu } => -ix_pow(z, nu) * coef,
            TermShape::SechSquared { coef, shift } => {
                let c = (z - shift).cosh();
                coef / (c * c)
            }
            TermShape::SecSquared { coef, shift } => {
                let c = (z - shift).cos();
                coef / (c * c)
            }
        };
        if !is_finite(v) {
            return Err(Error::NonFinite {
                re: z.re.as_f64(),
                im: z.im.as_f64(),
            });
        }
        Ok(v)
    }
}

/// `(i z)^nu`: exact integer powers, principal branch otherwise.
pub fn ix_pow<T: Real>(z: Cx<T>, nu: T) -> Cx<T> {
    if nu.fract() == T::zero() && nu.abs() < T::lit(1e6) {
        let n = nu.to_i32().expect("integer exponent");
        mul_i_pow(z.powi(n), i64::from(n))
    } else {
        let w = Complex::new(-z.im, z.re);
        if w.norm() == T::zero() {
            return Cx::new(T::zero(), T::zero());
        }
        (w.ln() * nu).exp()
    }
}
