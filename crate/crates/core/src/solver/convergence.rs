//! Observed order of the finite-difference eigenvalues under refinement.

use crate::error::{Error, Result};
use crate::potential::Hamiltonian;
use crate::scalar::Real;

use super::contour::Contour;
use super::operator::discretize;
use super::spectrum::matrix_eigenvalues;

/// Refinement table for one level.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub n_points: Vec<usize>,
    pub steps: Vec<f64>,
    /// Real parts of the level on each grid.
    pub values: Vec<f64>,
    /// Extrapolated `h → 0` limit.
    pub reference: f64,
    /// `|λ_N − reference|`.
    pub errors: Vec<f64>,
    /// Fitted order, NaN when degenerate.
    pub order: f64,
    /// Set when the values do not change with `h`, so no order exists.
    pub degenerate: bool,
}

/// Result of [`fit_convergence_order`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderFit {
    pub order: f64,
    pub reference: f64,
    pub degenerate: bool,
}

/// Fits `λ(h) = λ∞ + C hᵖ`.
///
/// `λ∞` comes from the three finest points (bisection on `p`), and `p`
/// from the least-squares slope of `log|λ − λ∞|` against `log h` over all
/// points.
pub fn fit_convergence_order(steps: &[f64], values: &[f64]) -> Result<OrderFit> {
    if steps.len() != values.len() {
        return Err(Error::InvalidInput(
            "steps and values differ in length".into(),
        ));
    }
    if steps.len() < 3 {
        return Err(Error::TooFewPoints(steps.len()));
    }
    let mut idx: Vec<usize> = (0..steps.len()).collect();
    idx.sort_by(|&a, &b| steps[b].total_cmp(&steps[a]));
    let hs: Vec<f64> = idx.iter().map(|&i| steps[i]).collect();
    let vs: Vec<f64> = idx.iter().map(|&i| values[i]).collect();

    let scale = vs.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let spread = vs.iter().fold(0.0_f64, |m, v| m.max((v - vs[0]).abs()));
    let degenerate = OrderFit {
        order: f64::NAN,
        reference: vs[vs.len() - 1],
        degenerate: true,
    };
    if spread <= 1e-13 * scale {
        return Ok(degenerate);
    }

    let k = hs.len();
    let (h1, h2, h3) = (hs[k - 3], hs[k - 2], hs[k - 1]);
    let (v1, v2, v3) = (vs[k - 3], vs[k - 2], vs[k - 1]);
    // (v1 − v2)/(v2 − v3) = (h1ᵖ − h2ᵖ)/(h2ᵖ − h3ᵖ)
    let target = (v1 - v2) / (v2 - v3);
    if !target.is_finite() || target <= 0.0 {
        return Ok(degenerate);
    }
    let ratio = |p: f64| (h1.powf(p) - h2.powf(p)) / (h2.powf(p) - h3.powf(p));
    let (mut lo, mut hi) = (0.05_f64, 12.0_f64);
    if (ratio(lo) - target) * (ratio(hi) - target) > 0.0 {
        return Ok(degenerate);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (ratio(lo) - target) * (ratio(mid) - target) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let p = 0.5 * (lo + hi);
    let c = (v2 - v3) / (h2.powf(p) - h3.powf(p));
    let reference = v3 - c * h3.powf(p);

    let pts: Vec<(f64, f64)> = hs
        .iter()
        .zip(&vs)
        .filter(|(_, v)| (*v - reference).abs() > 0.0)
        .map(|(h, v)| (h.ln(), (v - reference).abs().ln()))
        .collect();
    if pts.len() < 2 {
        return Ok(degenerate);
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(OrderFit {
        order: sxy / sxx,
        reference,
        degenerate: false,
    })
}

/// Solves level `level` on `template` re-sampled at each of `n_list`.
pub fn convergence_study<T: Real>(
    h: &Hamiltonian<T>,
    template: &Contour<T>,
    n_list: &[usize],
    level: usize,
) -> Result<ConvergenceStudy> {
    if n_list.len() < 3 {
        return Err(Error::TooFewPoints(n_list.len()));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "n_list must be strictly increasing".into(),
        ));
    }
    let mut steps = Vec::with_capacity(n_list.len());
    let mut values = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let c = template.with_points(n);
        let op = discretize(h, &c)?;
        let (ev, _) = matrix_eigenvalues(&op, level + 1)?;
        // the physical end: ascending for positive mass, descending otherwise
        let lam = if h.mass() > T::zero() {
            ev[level]
        } else {
            ev[ev.len() - 1 - level]
        };
        steps.push(c.step().as_f64());
        values.push(lam.re.as_f64());
    }
    let fit = fit_convergence_order(&steps, &values)?;
    let errors = values.iter().map(|v| (v - fit.reference).abs()).collect();
    Ok(ConvergenceStudy {
        n_points: n_list.to_vec(),
        steps,
        values,
        reference: fit.reference,
        errors,
        order: fit.order,
        degenerate: fit.degenerate,
    })
}

impl ConvergenceStudy {
    /// CSV with header `n_points,h,value,error`.
    pub fn to_csv(&self) -> String {
        use super::spectrum::num;
        let mut out = String::from("n_points,h,value,error\n");
        for i in 0..self.n_points.len() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.n_points[i],
                num(self.steps[i]),
                num(self.values[i]),
                num(self.errors[i])
            ));
        }
        out
    }
}
