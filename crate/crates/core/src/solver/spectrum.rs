//! Spectra with method metadata, their CSV form, and the solve drivers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::closed_form_levels;
use crate::potential::Hamiltonian;
use crate::scalar::{cmp_re_im, Cx, Real};

use super::contour::Contour;
use super::inverse::{eigenvector_inverse_iteration, rayleigh_refine};
use super::operator::{discretize, TridiagOperator};
use super::qr::{eig_complex_tridiag, eig_complex_tridiag_top};
use super::shooting::shoot_find;
use super::sturm::{eig_sym_tridiag, eig_sym_tridiag_top};

/// How a spectrum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Finite differences, Sturm bisection.
    Sturm,
    /// Finite differences, complex QR.
    Qr,
    /// Finite differences extrapolated from `N` and `2N − 1` samples.
    SturmRichardson,
    QrRichardson,
    Shoot,
    Exact,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Sturm => "sturm",
            Method::Qr => "qr",
            Method::SturmRichardson => "sturm-richardson",
            Method::QrRichardson => "qr-richardson",
            Method::Shoot => "shoot",
            Method::Exact => "exact",
        }
    }
}

/// Eigenvalues sorted by real part (ties by imaginary part).
///
/// `residuals[i]` is `‖(A − λ)ψ‖/‖ψ‖` for matrix methods, `|W(λ)|` for
/// shooting, and zero for closed forms.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub eigenvalues: Vec<Cx<T>>,
    pub residuals: Vec<T>,
    pub method: Method,
    pub grid: Option<Contour<T>>,
}

impl<T: Real> Spectrum<T> {
    /// Builds a spectrum, sorting the pairs.
    pub fn new(mut pairs: Vec<(Cx<T>, T)>, method: Method, grid: Option<Contour<T>>) -> Self {
        pairs.sort_by(|a, b| cmp_re_im(&a.0, &b.0));
        let (eigenvalues, residuals) = pairs.into_iter().unzip();
        Self {
            eigenvalues,
            residuals,
            method,
            grid,
        }
    }

    /// Real-valued levels with zero residuals, for hand-built spectra.
    pub fn from_real(levels: &[T], method: Method) -> Self {
        Self::new(
            levels
                .iter()
                .map(|&e| (Cx::new(e, T::zero()), T::zero()))
                .collect(),
            method,
            None,
        )
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn max_imag(&self) -> T {
        self.eigenvalues
            .iter()
            .map(|z| z.im.abs())
            .fold(T::zero(), T::max)
    }

    /// CSV with header `index,re,im,residual,method,n_points,contour_kind,imag_offset`.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("index,re,im,residual,method,n_points,contour_kind,imag_offset\n");
        let (n, kind, off) = match &self.grid {
            Some(c) => (c.n_points, c.kind_tag(), c.imag_offset().as_f64()),
            None => (0, "none", 0.0),
        };
        for (i, (z, r)) in self.eigenvalues.iter().zip(&self.residuals).enumerate() {
            let _ = writeln!(
                out,
                "{i},{},{},{},{},{n},{kind},{}",
                num(z.re.as_f64()),
                num(z.im.as_f64()),
                num(r.as_f64()),
                self.method.tag(),
                num(off),
            );
        }
        out
    }
}

/// 17 significant digits; negative zero printed unsigned.
pub fn num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Which end of the spectrum is physical: the bottom for positive mass,
/// the top for negative mass (the operator is then bounded above).
fn wants_top<T: Real>(op: &TridiagOperator<T>) -> bool {
    op.off > T::zero()
}

/// The `count` extreme eigenvalues of `op` by Sturm (real symmetric input)
/// or complex QR, ascending.
pub fn matrix_eigenvalues<T: Real>(
    op: &TridiagOperator<T>,
    count: usize,
) -> Result<(Vec<Cx<T>>, Method)> {
    let top = wants_top(op);
    if let Some(d) = op.real_diag() {
        let ev = if top {
            eig_sym_tridiag_top(&d, op.off, count)?
        } else {
            eig_sym_tridiag(&d, op.off, count)?
        };
        return Ok((
            ev.into_iter().map(|e| Cx::new(e, T::zero())).collect(),
            Method::Sturm,
        ));
    }
    let off = Cx::new(op.off, T::zero());
    let ev = if top {
        eig_complex_tridiag_top(&op.diag, off, count)?
    } else {
        eig_complex_tridiag(&op.diag, off, count)?
    };
    Ok((polish(op, ev), Method::Qr))
}

/// Complex QR uses non-unitary rotations, so its eigenvalues can carry
/// errors well above the conditioning of the problem. Each is polished by
/// Rayleigh-quotient iteration; a value is kept as is when polishing fails
/// or lands on a level already taken.
fn polish<T: Real>(op: &TridiagOperator<T>, ev: Vec<Cx<T>>) -> Vec<Cx<T>> {
    let dup = T::lit(1e-8);
    let mut out: Vec<Cx<T>> = Vec::with_capacity(ev.len());
    for (i, &l) in ev.iter().enumerate() {
        let refined = rayleigh_refine(op, l)
            .ok()
            .map(|v| v.eigenvalue)
            .filter(|&r| {
                let taken = |z: &Cx<T>| (z - r).norm() <= dup * T::one().max(r.norm());
                !out.iter().any(taken) && !ev[i + 1..].iter().any(taken)
            });
        out.push(refined.unwrap_or(l));
    }
    out.sort_by(cmp_re_im);
    out
}

fn residuals<T: Real>(op: &TridiagOperator<T>, ev: &[Cx<T>]) -> Vec<T> {
    ev.iter()
        .map(|&l| eigenvector_inverse_iteration(op, l).map_or(T::nan(), |v| v.residual))
        .collect()
}

/// Plain finite-difference spectrum on `c`.
pub fn fd_spectrum<T: Real>(
    h: &Hamiltonian<T>,
    c: &Contour<T>,
    count: usize,
) -> Result<Spectrum<T>> {
    let op = discretize(h, c)?;
    let (ev, method) = matrix_eigenvalues(&op, count)?;
    let res = residuals(&op, &ev);
    Ok(Spectrum::new(
        ev.into_iter().zip(res).collect(),
        method,
        Some(*c),
    ))
}

/// Finite differences on `c` and on `c.refined()`, combined levelwise as
/// `(4λ_{h/2} − λ_h)/3`, which removes the `h²` error term. Residuals are
/// those of the refined grid.
pub fn fd_spectrum_richardson<T: Real>(
    h: &Hamiltonian<T>,
    c: &Contour<T>,
    count: usize,
) -> Result<Spectrum<T>> {
    let coarse = fd_spectrum(h, c, count)?;
    let fine = fd_spectrum(h, &c.refined(), count)?;
    let method = match fine.method {
        Method::Sturm => Method::SturmRichardson,
        _ => Method::QrRichardson,
    };
    let three = Cx::new(T::lit(3.0), T::zero());
    let four = Cx::new(T::lit(4.0), T::zero());
    let mut used = vec![false; coarse.len()];
    let mut pairs = Vec::with_capacity(fine.len());
    for (&lf, &rf) in fine.eigenvalues.iter().zip(&fine.residuals) {
        let nearest = coarse
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .min_by(|a, b| {
                (a.1 - lf)
                    .norm()
                    .partial_cmp(&(b.1 - lf).norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some((j, &lc)) = nearest else { break };
        used[j] = true;
        pairs.push(((four * lf - lc) / three, rf));
    }
    Ok(Spectrum::new(pairs, method, Some(*c)))
}

/// Shooting refinement seeded by the finite-difference spectrum.
///
/// A few extra seeds are tried so one failed seed does not lose a level.
pub fn shoot_spectrum<T: Real>(
    h: &Hamiltonian<T>,
    c: &Contour<T>,
    count: usize,
) -> Result<Spectrum<T>> {
    let op = discretize(h, c)?;
    let extra = (count + 2).min(op.dim());
    let (seeds, _) = matrix_eigenvalues(&op, extra)?;
    let seeds = if wants_top(&op) {
        seeds.into_iter().rev().collect::<Vec<_>>()
    } else {
        seeds
    };
    let res = shoot_find(h, c, &seeds, count)?;
    Ok(Spectrum::new(res.roots, Method::Shoot, Some(*c)))
}

/// Closed-form levels, when known.
pub fn exact_spectrum<T: Real>(
    h: &Hamiltonian<T>,
    count: usize,
    grid: Option<Contour<T>>,
) -> Result<Spectrum<T>> {
    let levels = closed_form_levels(h, count)?;
    Ok(Spectrum::new(
        levels.into_iter().map(|z| (z, T::zero())).collect(),
        Method::Exact,
        grid,
    ))
}

/// Fails with `SpectrumIncomplete` when fewer than `count` levels exist.
pub fn require_levels<T: Real>(s: &Spectrum<T>, count: usize) -> Result<()> {
    if s.len() < count {
        return Err(Error::SpectrumIncomplete {
            found: s.len(),
            requested: count,
        });
    }
    Ok(())
}
