//! The mass-sign pair `H± = p² ± m²x² + i f x³`, solved in two boxes.

use serde::Serialize;

use crate::error::Result;
use crate::potential::{families, Hamiltonian};
use crate::scalar::{to_pair, Cx, Real};
use crate::solver::{fd_spectrum_richardson, shoot_refine, Contour, Spectrum};

use super::pairing::{pair_levels, PairingMode, PairingReport, PairingWire};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZnojilConfig<T> {
    pub levels: usize,
    /// Two box half-widths; the step is the same in both.
    pub half_widths: [T; 2],
    pub step: T,
    /// Movement between boxes above which a level is unreliable.
    pub truncation_tol: T,
    pub tol: T,
}

impl<T: Real> Default for ZnojilConfig<T> {
    fn default() -> Self {
        Self {
            levels: 4,
            half_widths: [T::lit(12.0), T::lit(14.0)],
            step: T::lit(0.006),
            truncation_tol: T::lit(1e-3),
            tol: T::lit(1e-3),
        }
    }
}

/// One sign of the pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SideReport<T> {
    pub hamiltonian: Hamiltonian<T>,
    /// Extrapolated matrix levels per box.
    pub matrix: [Vec<Cx<T>>; 2],
    /// Shooting-refined levels per box (may be short).
    pub shoot: [Vec<Cx<T>>; 2],
    /// Best available levels in the larger box.
    pub levels: Vec<Cx<T>>,
    /// `|λ(box 2) − λ(box 1)|` per level.
    pub truncation_shift: Vec<T>,
    pub unreliable: Vec<usize>,
    /// Largest `|shoot − matrix|` in the larger box, if shooting found
    /// every level.
    pub cross_method_deviation: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZnojilReport<T> {
    pub m2: T,
    pub f: T,
    pub plus: SideReport<T>,
    pub minus: SideReport<T>,
    /// `H₊` levels against `H₋` levels up to a constant.
    pub pairing: PairingReport<T>,
}

fn box_contour<T: Real>(half: T, step: T) -> Result<Contour<T>> {
    let n = ((half + half) / step).round().to_usize().unwrap_or(0) + 1;
    Contour::real(-half, half, n)
}

fn solve_side<T: Real>(h: Hamiltonian<T>, cfg: &ZnojilConfig<T>) -> Result<SideReport<T>> {
    let mut matrix: [Vec<Cx<T>>; 2] = Default::default();
    let mut shoot: [Vec<Cx<T>>; 2] = Default::default();
    let mut best: [Vec<Cx<T>>; 2] = Default::default();
    for (b, &half) in cfg.half_widths.iter().enumerate() {
        let c = box_contour(half, cfg.step)?;
        let m: Spectrum<T> = fd_spectrum_richardson(&h, &c, cfg.levels)?;
        let s = shoot_refine(&h, &c, &m.eigenvalues, cfg.levels)
            .map(|r| r.roots.into_iter().map(|(z, _)| z).collect::<Vec<_>>())
            .unwrap_or_default();
        best[b] = if s.len() == m.len() {
            s.clone()
        } else {
            m.eigenvalues.clone()
        };
        matrix[b] = m.eigenvalues;
        shoot[b] = s;
    }
    let truncation_shift: Vec<T> = best[0]
        .iter()
        .zip(&best[1])
        .map(|(a, b)| (a - b).norm())
        .collect();
    let unreliable = truncation_shift
        .iter()
        .enumerate()
        // NaN shifts count as unreliable
        .filter(|(_, &d)| d.is_nan() || d > cfg.truncation_tol)
        .map(|(i, _)| i)
        .collect();
    let cross_method_deviation = (shoot[1].len() == matrix[1].len()).then(|| {
        shoot[1]
            .iter()
            .zip(&matrix[1])
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    });
    let [_, levels] = best;
    Ok(SideReport {
        hamiltonian: h,
        matrix,
        shoot,
        levels,
        truncation_shift,
        unreliable,
        cross_method_deviation,
    })
}

/// Runs the experiment. Disagreement between the two sides is data; only
/// a solver breakdown is an error.
pub fn znojil_duality<T: Real>(m2: T, f: T, cfg: &ZnojilConfig<T>) -> Result<ZnojilReport<T>> {
    let plus = solve_side(families::cubic_mass_sign(m2, f, true)?, cfg)?;
    let minus = solve_side(families::cubic_mass_sign(m2, f, false)?, cfg)?;
    let pairing = pair_levels(
        &plus.levels,
        &minus.levels,
        cfg.tol,
        PairingMode::ConstantShifted,
    );
    Ok(ZnojilReport {
        m2,
        f,
        plus,
        minus,
        pairing,
    })
}

#[derive(Serialize)]
struct SideWire {
    levels: Vec<[f64; 2]>,
    matrix: [Vec<[f64; 2]>; 2],
    shoot: [Vec<[f64; 2]>; 2],
    truncation_shift: Vec<f64>,
    unreliable: Vec<usize>,
    cross_method_deviation: Option<f64>,
}

#[derive(Serialize)]
struct ZnojilWire {
    m2: f64,
    f: f64,
    half_widths: [f64; 2],
    step: f64,
    plus: SideWire,
    minus: SideWire,
    pairing: PairingWire,
}

fn pairs<T: Real>(v: &[Cx<T>]) -> Vec<[f64; 2]> {
    v.iter().map(|&z| to_pair(z)).collect()
}

fn side_wire<T: Real>(s: &SideReport<T>) -> SideWire {
    SideWire {
        levels: pairs(&s.levels),
        matrix: [pairs(&s.matrix[0]), pairs(&s.matrix[1])],
        shoot: [pairs(&s.shoot[0]), pairs(&s.shoot[1])],
        truncation_shift: s.truncation_shift.iter().map(|d| d.as_f64()).collect(),
        unreliable: s.unreliable.clone(),
        cross_method_deviation: s.cross_method_deviation.map(Real::as_f64),
    }
}

impl<T: Real> ZnojilReport<T> {
    pub fn to_json(&self, cfg: &ZnojilConfig<T>) -> String {
        let wire = ZnojilWire {
            m2: self.m2.as_f64(),
            f: self.f.as_f64(),
            half_widths: [cfg.half_widths[0].as_f64(), cfg.half_widths[1].as_f64()],
            step: cfg.step.as_f64(),
            plus: side_wire(&self.plus),
            minus: side_wire(&self.minus),
            pairing: self.pairing.wire(),
        };
        let mut s = serde_json::to_string_pretty(&wire).expect("report serializes");
        s.push('\n');
        s
    }
}
