//! Wronskian-matching shooting on a contour.
//!
//! `ψ'' = 2m (V(z(t)) − E) ψ` is integrated with fixed-step RK4 from both
//! ends towards the middle node; eigenvalues are the zeros of the
//! normalized Wronskian mismatch, found by a deflated complex secant.

use crate::error::{Error, Result};
use crate::potential::Hamiltonian;
use crate::scalar::{is_finite, Cx, Real};

use super::contour::{Contour, MIN_POINTS};
use super::operator::CONTOUR_POLE_TOLERANCE;

/// Rescaling threshold for the integrated pair `(ψ, ψ')`.
const RESCALE_AT: f64 = 1e100;
/// Normalized magnitude beyond which the integration is declared overflowed.
const OVERFLOW_AT: f64 = 1e300;
const MAX_SECANT_STEPS: usize = 80;

/// Absolute `|W|` below which a converged secant root is accepted.
pub const ROOT_ACCEPT: f64 = 1e-6;
/// Relative step at which the secant is considered converged.
pub const SECANT_TOLERANCE: f64 = 1e-10;
/// Roots closer than this are the same root.
pub const DUPLICATE_TOLERANCE: f64 = 1e-8;

/// Potential samples at nodes and half-nodes, reused across energies.
#[derive(Debug, Clone)]
pub struct ShootingGrid<T> {
    contour: Contour<T>,
    two_m: T,
    v_node: Vec<Cx<T>>,
    v_half: Vec<Cx<T>>,
    first: usize,
    last: usize,
}

fn singular_at<T: Real>(h: &Hamiltonian<T>, z: Cx<T>) -> bool {
    h.potential
        .singularity_distance(z)
        .is_some_and(|d| d < T::tol(CONTOUR_POLE_TOLERANCE))
}

impl<T: Real> ShootingGrid<T> {
    pub fn new(h: &Hamiltonian<T>, c: &Contour<T>) -> Result<Self> {
        let n = c.n_points;
        if n < MIN_POINTS {
            return Err(Error::ContourTooCoarse { n_points: n });
        }
        // a singular endpoint moves the Dirichlet condition one node inward
        let first = usize::from(singular_at(h, c.point(0)));
        let last = n - 1 - usize::from(singular_at(h, c.point(n - 1)));
        let half = c.step() / T::lit(2.0);
        let mut v_node = vec![Cx::new(T::zero(), T::zero()); n];
        let mut v_half = vec![Cx::new(T::zero(), T::zero()); n - 1];
        for (k, slot) in v_node.iter_mut().enumerate().take(last + 1).skip(first) {
            let z = c.point(k);
            if singular_at(h, z) {
                return Err(Error::PoleOnContour {
                    sample: k,
                    distance: h
                        .potential
                        .singularity_distance(z)
                        .map_or(0.0, Real::as_f64),
                });
            }
            *slot = h.potential.eval(z)?;
        }
        for (k, slot) in v_half.iter_mut().enumerate().take(last).skip(first) {
            *slot = h.potential.eval(c.at(c.param(k) + half))?;
        }
        Ok(Self {
            contour: *c,
            two_m: T::lit(2.0) * h.mass(),
            v_node,
            v_half,
            first,
            last,
        })
    }

    pub fn contour(&self) -> &Contour<T> {
        &self.contour
    }

    fn midpoint(&self) -> usize {
        (self.first + self.last) / 2
    }

    /// RK4 from node `from` to node `to`, starting from `ψ = 0, ψ' = ±h`.
    fn integrate(&self, e: Cx<T>, from: usize, to: usize) -> Result<(Cx<T>, Cx<T>)> {
        let h = self.contour.step();
        let forward = to >= from;
        let dt = if forward { h } else { -h };
        let k2m = Cx::new(self.two_m, T::zero());
        let dtc = Cx::new(dt, T::zero());
        let half = Cx::new(dt / T::lit(2.0), T::zero());
        let sixth = Cx::new(dt / T::lit(6.0), T::zero());
        let two = Cx::new(T::lit(2.0), T::zero());
        let rescale = T::lit(RESCALE_AT);

        let mut psi = Cx::new(T::zero(), T::zero());
        let mut dpsi = Cx::new(h, T::zero());
        let mut k = from;
        while k != to {
            let next = if forward { k + 1 } else { k - 1 };
            let hk = if forward { k } else { k - 1 };
            let q0 = k2m * (self.v_node[k] - e);
            let qh = k2m * (self.v_half[hk] - e);
            let q1 = k2m * (self.v_node[next] - e);

            let a1 = dpsi;
            let b1 = q0 * psi;
            let a2 = dpsi + half * b1;
            let b2 = qh * (psi + half * a1);
            let a3 = dpsi + half * b2;
            let b3 = qh * (psi + half * a2);
            let a4 = dpsi + dtc * b3;
            let b4 = q1 * (psi + dtc * a3);
            psi = psi + sixth * (a1 + two * a2 + two * a3 + a4);
            dpsi = dpsi + sixth * (b1 + two * b2 + two * b3 + b4);

            let size = psi.norm() + dpsi.norm();
            if !size.is_finite() {
                return Err(Error::Overflow {
                    re: e.re.as_f64(),
                    im: e.im.as_f64(),
                });
            }
            if size > rescale {
                let s = Cx::new(T::one() / size, T::zero());
                psi = psi * s;
                dpsi = dpsi * s;
            }
            k = next;
        }
        Ok((psi, dpsi))
    }

    /// Normalized Wronskian mismatch at the middle node.
    pub fn residual(&self, e: Cx<T>) -> Result<Cx<T>> {
        let mid = self.midpoint();
        let (pl, dl) = self.integrate(e, self.first, mid)?;
        let (pr, dr) = self.integrate(e, self.last, mid)?;
        let nl = (pl.norm_sqr() + dl.norm_sqr()).sqrt();
        let nr = (pr.norm_sqr() + dr.norm_sqr()).sqrt();
        let overflow = || Error::Overflow {
            re: e.re.as_f64(),
            im: e.im.as_f64(),
        };
        if nl == T::zero() || nr == T::zero() {
            return Err(overflow());
        }
        if nl > T::lit(OVERFLOW_AT) || nr > T::lit(OVERFLOW_AT) {
            return Err(overflow());
        }
        let w = (pl * dr - dl * pr) / Cx::new(nl * nr, T::zero());
        if !is_finite(w) {
            return Err(overflow());
        }
        Ok(w)
    }

    /// Secant on `W(E) / Π(E − E_found)` from `seed`.
    fn secant(&self, seed: Cx<T>, found: &[Cx<T>]) -> Option<Cx<T>> {
        let deflated = |e: Cx<T>| -> Option<Cx<T>> {
            let mut w = self.residual(e).ok()?;
            for &r in found {
                w = w / (e - r);
            }
            is_finite(w).then_some(w)
        };
        let scale = T::one().max(seed.norm());
        let radius = T::lit(0.25) * scale + T::one();
        let tol = T::tol(SECANT_TOLERANCE);
        let mut e0 = seed;
        let mut e1 = seed + Cx::new(T::lit(1e-4) * scale, T::zero());
        let mut f0 = deflated(e0)?;
        let mut f1 = deflated(e1)?;
        for _ in 0..MAX_SECANT_STEPS {
            let df = f1 - f0;
            if df.norm() == T::zero() {
                break;
            }
            let step = f1 * (e1 - e0) / df;
            let e2 = e1 - step;
            if !is_finite(e2) || (e2 - seed).norm() > radius {
                return None;
            }
            if step.norm() <= tol * T::one().max(e2.norm()) {
                return Some(e2);
            }
            e0 = e1;
            f0 = f1;
            e1 = e2;
            f1 = deflated(e1)?;
        }
        let w = self.residual(e1).ok()?;
        (w.norm() <= T::tol(ROOT_ACCEPT) * T::lit(1e-2)).then_some(e1)
    }
}

/// `W(E)` for `h` on `c`.
pub fn shoot_residual<T: Real>(h: &Hamiltonian<T>, c: &Contour<T>, e: Cx<T>) -> Result<Cx<T>> {
    ShootingGrid::new(h, c)?.residual(e)
}

/// Outcome of refining a list of seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootingResult<T> {
    /// Converged roots, ascending by real part, with `|W|` at each.
    pub roots: Vec<(Cx<T>, T)>,
    /// Indices of seeds that led to no accepted root.
    pub no_root_from_seed: Vec<usize>,
}

/// Refines every seed (stopping once `count` distinct roots are known);
/// seeds that fail are recorded, not fatal.
pub fn shoot_refine<T: Real>(
    h: &Hamiltonian<T>,
    c: &Contour<T>,
    seeds: &[Cx<T>],
    count: usize,
) -> Result<ShootingResult<T>> {
    if seeds.is_empty() {
        return Err(Error::InvalidInput(
            "shooting needs at least one seed".into(),
        ));
    }
    let grid = ShootingGrid::new(h, c)?;
    let mut found: Vec<Cx<T>> = Vec::new();
    let mut failed = Vec::new();
    let dup = T::tol(DUPLICATE_TOLERANCE);
    for (i, &seed) in seeds.iter().enumerate() {
        if found.len() >= count {
            break;
        }
        // plain secant first, deflation only if it lands on a known root
        let mut root = grid.secant(seed, &[]);
        if let Some(r) = root {
            if found
                .iter()
                .any(|&f| (f - r).norm() <= dup * T::one().max(r.norm()))
            {
                root = grid.secant(seed, &found);
            }
        }
        let accepted = root.and_then(|r| {
            let w = grid.residual(r).ok()?.norm();
            let fresh = found
                .iter()
                .all(|&f| (f - r).norm() > dup * T::one().max(r.norm()));
            (w <= T::tol(ROOT_ACCEPT) && fresh).then_some(r)
        });
        match accepted {
            Some(r) => found.push(r),
            None => failed.push(i),
        }
    }
    let mut roots = found
        .into_iter()
        .map(|r| Ok((r, grid.residual(r)?.norm())))
        .collect::<Result<Vec<_>>>()?;
    roots.sort_by(|a, b| crate::scalar::cmp_re_im(&a.0, &b.0));
    Ok(ShootingResult {
        roots,
        no_root_from_seed: failed,
    })
}

/// Like [`shoot_refine`] but fails unless `count` roots converge.
pub fn shoot_find<T: Real>(
    h: &Hamiltonian<T>,
    c: &Contour<T>,
    seeds: &[Cx<T>],
    count: usize,
) -> Result<ShootingResult<T>> {
    let res = shoot_refine(h, c, seeds, count)?;
    if res.roots.len() < count {
        return Err(Error::SpectrumIncomplete {
            found: res.roots.len(),
            requested: count,
        });
    }
    Ok(res)
}
