//! Closed-form spectra used as ground truth for the solvers.

use crate::error::{Error, Result};
use crate::potential::{Hamiltonian, TermShape};
use crate::scalar::{Cx, Real};

/// Sign label `q = ±1` of the two level families of the regularized
/// shifted oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiParity {
    Plus,
    Minus,
}

impl QuasiParity {
    pub fn value<T: Real>(self) -> T {
        match self {
            QuasiParity::Plus => T::one(),
            QuasiParity::Minus => -T::one(),
        }
    }
}

/// Which sign of the oscillator ladder to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderBranch {
    Standard,
    Negated,
}

/// `±ω(n + 1/2)` for `n = 0..=n_max`.
pub fn ho_levels<T: Real>(omega: T, branch: LadderBranch, n_max: usize) -> Vec<T> {
    let sign = match branch {
        LadderBranch::Standard => T::one(),
        LadderBranch::Negated => -T::one(),
    };
    (0..=n_max)
        .map(|n| sign * omega * (T::from_count(n) + T::lit(0.5)))
        .collect()
}

/// Levels of `p² + (x − ic)² + (α² − 1/4)/(x − ic)²`: `2n + 1` when
/// `|α| = 1/2`, otherwise `4n + 2 + 2qα`.
pub fn shifted_osc_levels<T: Real>(alpha: T, q: QuasiParity, n_max: usize) -> Vec<T> {
    let two = T::lit(2.0);
    if (alpha.abs() - T::lit(0.5)).abs() <= T::epsilon() {
        return (0..=n_max)
            .map(|n| two * T::from_count(n) + T::one())
            .collect();
    }
    (0..=n_max)
        .map(|n| T::lit(4.0) * T::from_count(n) + two + two * q.value::<T>() * alpha)
        .collect()
}

/// Trigonometric well `B/cos²x` on `(−π/2, π/2)` in units `2m = 1`:
/// `E_n = (n + λ)²` with `λ = (1 + √(1 + 4B))/2`.
pub fn trig_pt_levels<T: Real>(b: T, n_max: usize) -> Vec<T> {
    let lambda = (T::one() + (T::one() + T::lit(4.0) * b).sqrt()) / T::lit(2.0);
    (0..=n_max)
        .map(|n| {
            let k = T::from_count(n) + lambda;
            k * k
        })
        .collect()
}

/// Recognizes a Hamiltonian with a known closed-form spectrum and returns
/// its lowest `count` levels.
///
/// Supported: (shifted) harmonic oscillators, the regularized
/// imaginary-shift oscillator, `−g(ix)²`, and a single `B sec²` well.
pub fn closed_form_levels<T: Real>(h: &Hamiltonian<T>, count: usize) -> Result<Vec<Cx<T>>> {
    let m = h.mass();
    let terms: Vec<_> = h.potential.terms.iter().filter(|t| !t.is_zero()).collect();
    let tiny = T::tol(1e-14);
    let no = |why: &str| Err(Error::NoClosedForm(why.to_string()));
    if m <= T::zero() {
        return no("negative-mass spectra are unbounded below");
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let n_max = count - 1;
    let real = |v: Vec<T>| {
        v.into_iter()
            .map(|e| Cx::new(e, T::zero()))
            .collect::<Vec<_>>()
    };

    let oscillator = |a: T, core: Option<(T, Cx<T>)>, shift: Cx<T>| -> Result<Vec<Cx<T>>> {
        if a <= T::zero() {
            return Err(Error::NoClosedForm(
                "quadratic coefficient must be positive".into(),
            ));
        }
        let omega = (T::lit(2.0) * a / m).sqrt();
        match core {
            None => Ok(real(ho_levels(omega, LadderBranch::Standard, n_max))),
            Some((g, core_shift)) => {
                if core_shift != shift {
                    return Err(Error::NoClosedForm(
                        "core and oscillator centers differ".into(),
                    ));
                }
                if shift.im.abs() <= tiny {
                    return Err(Error::NoClosedForm(
                        "core singularity on the real axis".into(),
                    ));
                }
                let disc = T::lit(2.0) * m * g + T::lit(0.25);
                if disc < T::zero() {
                    return Err(Error::NoClosedForm("complex alpha".into()));
                }
                let alpha = disc.sqrt();
                // E = ω(2n + 1 + qα), both quasi-parities
                let mut all: Vec<T> = Vec::with_capacity(2 * count);
                for q in [QuasiParity::Plus, QuasiParity::Minus] {
                    for n in 0..=n_max {
                        all.push(
                            omega
                                * (T::lit(2.0) * T::from_count(n)
                                    + T::one()
                                    + q.value::<T>() * alpha),
                        );
                    }
                }
                all.sort_by(|a, b| a.partial_cmp(b).expect("finite levels"));
                all.dedup_by(|a, b| (*a - *b).abs() <= tiny * (T::one() + a.abs()));
                all.truncate(count);
                Ok(real(all))
            }
        }
    };

    match terms.as_slice() {
        [t] => match t.shape {
            TermShape::ShiftedPower {
                coef,
                shift,
                exponent: 2,
            } if coef.im.abs() <= tiny => oscillator(coef.re, None, shift),
            TermShape::IxPower { coef, nu } if nu == T::lit(2.0) => {
                oscillator(coef, None, Cx::new(T::zero(), T::zero()))
            }
            TermShape::SecSquared { coef, shift }
                if coef.im.abs() <= tiny && shift.im.abs() <= tiny && coef.re >= T::zero() =>
            {
                // −ψ'' + 2mB sec² ψ = 2mE ψ
                let two_m = T::lit(2.0) * m;
                let levels = trig_pt_levels(two_m * coef.re, n_max);
                Ok(real(levels.into_iter().map(|e| e / two_m).collect()))
            }
            _ => no("unrecognized single-term potential"),
        },
        [a, b] => {
            let (quad, core) = match (a.shape, b.shape) {
                (
                    TermShape::ShiftedPower { exponent: 2, .. },
                    TermShape::ShiftedPower { exponent: -2, .. },
                ) => (a.shape, b.shape),
                (
                    TermShape::ShiftedPower { exponent: -2, .. },
                    TermShape::ShiftedPower { exponent: 2, .. },
                ) => (b.shape, a.shape),
                _ => return no("unrecognized two-term potential"),
            };
            let (
                TermShape::ShiftedPower {
                    coef: qc,
                    shift: qs,
                    ..
                },
                TermShape::ShiftedPower {
                    coef: gc,
                    shift: gs,
                    ..
                },
            ) = (quad, core)
            else {
                unreachable!()
            };
            if qc.im.abs() > tiny || gc.im.abs() > tiny {
                return no("complex couplings");
            }
            oscillator(qc.re, Some((gc.re, gs)), qs)
        }
        _ => no("no closed form for this term combination"),
    }
}
