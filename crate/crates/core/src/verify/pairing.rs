//! Matching two spectra level by level.

use serde::Serialize;

use crate::scalar::{Cx, Real};
use crate::solver::Spectrum;

/// How spectrum B is mapped before it is compared with A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingMode {
    /// `f(λ) = λ`
    Direct,
    /// `f(λ) = −λ`
    SignFlipped,
    /// `f(λ) = λ + s`, `s` fitted from the low levels.
    ConstantShifted,
}

impl PairingMode {
    pub const ALL: [PairingMode; 3] = [
        PairingMode::Direct,
        PairingMode::SignFlipped,
        PairingMode::ConstantShifted,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PairingMode::Direct => "direct",
            PairingMode::SignFlipped => "sign_flipped",
            PairingMode::ConstantShifted => "constant_shifted",
        }
    }
}

/// Ordered from worst to best, so `max` picks the best.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No level of A matched.
    Failed,
    /// Some levels matched, some did not.
    Partial,
    /// Every level on both sides matched.
    Isospectral,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Failed => "failed",
            Verdict::Partial => "partial",
            Verdict::Isospectral => "isospectral",
        }
    }
}

/// Outcome of [`pair_spectra`].
///
/// Only pairs with deviation `≤ tol` are formed; everything else is listed
/// as unmatched.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingReport<T> {
    pub mode: PairingMode,
    /// `(index in A, index in B, |λ_A − f(λ_B)|)`
    pub pairs: Vec<(usize, usize, T)>,
    pub unmatched_a: Vec<usize>,
    pub unmatched_b: Vec<usize>,
    /// `None` when nothing paired.
    pub max_deviation: Option<T>,
    pub fitted_shift: Option<Cx<T>>,
    pub verdict: Verdict,
    pub tol: T,
}

fn median<T: Real>(mut v: Vec<T>) -> T {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / T::lit(2.0)
    }
}

/// Median of `λ_A,k − λ_B,k` over the lowest `min(4, len)` levels, taken
/// separately for real and imaginary parts.
pub fn fit_shift<T: Real>(a: &[Cx<T>], b: &[Cx<T>]) -> Cx<T> {
    let k = 4.min(a.len()).min(b.len());
    if k == 0 {
        return Cx::new(T::zero(), T::zero());
    }
    let d: Vec<Cx<T>> = (0..k).map(|i| a[i] - b[i]).collect();
    Cx::new(
        median(d.iter().map(|z| z.re).collect()),
        median(d.iter().map(|z| z.im).collect()),
    )
}

/// Greedy nearest-neighbour pairing of `a` against `f(b)`, taking the
/// levels of `a` in ascending real part.
pub fn pair_levels<T: Real>(
    a: &[Cx<T>],
    b: &[Cx<T>],
    tol: T,
    mode: PairingMode,
) -> PairingReport<T> {
    let shift = (mode == PairingMode::ConstantShifted).then(|| fit_shift(a, b));
    let mapped: Vec<Cx<T>> = b
        .iter()
        .map(|&z| match mode {
            PairingMode::Direct => z,
            PairingMode::SignFlipped => -z,
            PairingMode::ConstantShifted => z + shift.unwrap_or_default(),
        })
        .collect();

    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&i, &j| crate::scalar::cmp_re_im(&a[i], &a[j]));
    let mut used = vec![false; b.len()];
    let mut pairs = Vec::new();
    let mut unmatched_a = Vec::new();
    for i in order {
        let best = mapped
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, z)| (j, (a[i] - z).norm()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(std::cmp::Ordering::Equal));
        match best {
            Some((j, dev)) if dev <= tol => {
                used[j] = true;
                pairs.push((i, j, dev));
            }
            _ => unmatched_a.push(i),
        }
    }
    unmatched_a.sort_unstable();
    let unmatched_b: Vec<usize> = (0..b.len()).filter(|&j| !used[j]).collect();
    let max_deviation = pairs.iter().map(|p| p.2).reduce(T::max);
    let verdict = if pairs.is_empty() {
        Verdict::Failed
    } else if unmatched_a.is_empty() && unmatched_b.is_empty() {
        Verdict::Isospectral
    } else {
        Verdict::Partial
    };
    PairingReport {
        mode,
        pairs,
        unmatched_a,
        unmatched_b,
        max_deviation,
        fitted_shift: shift,
        verdict,
        tol,
    }
}

/// [`pair_levels`] on two spectra.
pub fn pair_spectra<T: Real>(
    a: &Spectrum<T>,
    b: &Spectrum<T>,
    tol: T,
    mode: PairingMode,
) -> PairingReport<T> {
    pair_levels(&a.eigenvalues, &b.eigenvalues, tol, mode)
}

/// Reports for every mode.
pub fn pair_all_modes<T: Real>(a: &Spectrum<T>, b: &Spectrum<T>, tol: T) -> Vec<PairingReport<T>> {
    PairingMode::ALL
        .iter()
        .map(|&m| pair_spectra(a, b, tol, m))
        .collect()
}

/// Best verdict across reports, `Failed` if there are none.
pub fn best_verdict<T>(reports: &[PairingReport<T>]) -> Verdict {
    reports
        .iter()
        .map(|r| r.verdict)
        .max()
        .unwrap_or(Verdict::Failed)
}

#[derive(Serialize)]
pub(crate) struct PairingWire {
    mode: PairingMode,
    pairs: Vec<(usize, usize, f64)>,
    unmatched_a: Vec<usize>,
    unmatched_b: Vec<usize>,
    max_deviation: Option<f64>,
    fitted_shift: Option<[f64; 2]>,
    verdict: Verdict,
    tol: f64,
}

impl<T: Real> PairingReport<T> {
    pub(crate) fn wire(&self) -> PairingWire {
        PairingWire {
            mode: self.mode,
            pairs: self
                .pairs
                .iter()
                .map(|&(i, j, d)| (i, j, d.as_f64()))
                .collect(),
            unmatched_a: self.unmatched_a.clone(),
            unmatched_b: self.unmatched_b.clone(),
            max_deviation: self.max_deviation.map(Real::as_f64),
            fitted_shift: self.fitted_shift.map(crate::scalar::to_pair),
            verdict: self.verdict,
            tol: self.tol.as_f64(),
        }
    }

    /// `{"mode", "pairs", "unmatched_a", "unmatched_b", "max_deviation",
    /// "fitted_shift", "verdict", "tol"}`, pretty-printed.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.wire()).expect("report serializes");
        s.push('\n');
        s
    }
}
