//! End-to-end check of a PT-symmetric Hamiltonian against its Hermitian
//! partner.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::closed_form_levels;
use crate::potential::{hermitian_partner, Hamiltonian, PartnerDiagnostics, RotationSign};
use crate::scalar::{to_pair, Real};
use crate::solver::{fd_spectrum_richardson, shoot_spectrum, Contour, Spectrum};

use super::pairing::{
    best_verdict, pair_all_modes, pair_levels, PairingMode, PairingReport, PairingWire, Verdict,
};

/// Knobs of [`verify_proposition`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropositionConfig<T> {
    pub levels: usize,
    /// Pairing tolerance.
    pub tol: T,
    pub sign: RotationSign,
    /// The partner is solved on `[−half_width, half_width]`, or on
    /// `(pole + pole_offset, half_width]` when it has a real-axis pole.
    pub half_width: T,
    pub partner_points: usize,
    pub pole_offset: T,
}

impl<T: Real> Default for PropositionConfig<T> {
    fn default() -> Self {
        Self {
            levels: 4,
            tol: T::lit(1e-3),
            sign: RotationSign::Minus,
            half_width: T::lit(12.0),
            partner_points: 4000,
            pole_offset: T::lit(1e-6),
        }
    }
}

/// Pipeline stage at which a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    PtSolve,
    Partner,
    PartnerSolve,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StageFailure {
    pub stage: Stage,
    pub error: Error,
}

/// Where the partner was solved.
#[derive(Debug, Clone, PartialEq)]
pub struct PartnerDomain<T> {
    pub contour: Contour<T>,
    /// The real-axis pole the domain was cut at, if any.
    pub pole: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<T> {
    /// Shooting-refined levels of the PT Hamiltonian.
    pub pt_spectrum: Option<Spectrum<T>>,
    /// Extrapolated finite-difference levels of the PT Hamiltonian.
    pub pt_matrix_spectrum: Option<Spectrum<T>>,
    /// Largest `|shoot − matrix|` over the PT levels.
    pub cross_method_deviation: Option<T>,
    pub partner: Option<Hamiltonian<T>>,
    pub diagnostics: Option<PartnerDiagnostics<T>>,
    pub partner_domain: Option<PartnerDomain<T>>,
    pub partner_spectrum: Option<Spectrum<T>>,
    /// PT spectrum against partner spectrum, one report per mode.
    pub pairings: Vec<PairingReport<T>>,
    /// PT spectrum against the closed form, when one is known.
    pub exact: Option<PairingReport<T>>,
    pub verdict: Verdict,
    pub failure: Option<StageFailure>,
}

impl<T: Real> VerificationReport<T> {
    fn empty() -> Self {
        Self {
            pt_spectrum: None,
            pt_matrix_spectrum: None,
            cross_method_deviation: None,
            partner: None,
            diagnostics: None,
            partner_domain: None,
            partner_spectrum: None,
            pairings: Vec::new(),
            exact: None,
            verdict: Verdict::Failed,
            failure: None,
        }
    }

    fn fail(mut self, stage: Stage, error: Error) -> Self {
        self.failure = Some(StageFailure { stage, error });
        self
    }

    pub fn pairing(&self, mode: PairingMode) -> Option<&PairingReport<T>> {
        self.pairings.iter().find(|p| p.mode == mode)
    }
}

/// Solves the partner on a real line, cutting at the rightmost real pole.
fn partner_domain<T: Real>(
    partner: &Hamiltonian<T>,
    cfg: &PropositionConfig<T>,
) -> Result<PartnerDomain<T>> {
    let l = cfg.half_width;
    let poles = partner.potential.real_axis_poles(-l, l);
    match poles.into_iter().reduce(T::max) {
        None => Ok(PartnerDomain {
            contour: Contour::real(-l, l, cfg.partner_points)?,
            pole: None,
        }),
        Some(p) => Ok(PartnerDomain {
            contour: Contour::real(p + cfg.pole_offset, l, cfg.partner_points)?,
            pole: Some(p),
        }),
    }
}

/// Solves `h_pt` on `contour_pt`, builds and solves its Hermitian partner,
/// and pairs the two spectra in every mode.
///
/// Only an input that is not PT-symmetric is an error; a solver breakdown
/// further down is recorded in [`VerificationReport::failure`] with
/// whatever was computed before it.
pub fn verify_proposition<T: Real>(
    h_pt: &Hamiltonian<T>,
    contour_pt: &Contour<T>,
    cfg: &PropositionConfig<T>,
) -> Result<VerificationReport<T>> {
    let mut report = VerificationReport::empty();
    let (partner, diag) = match hermitian_partner(h_pt, cfg.sign) {
        Ok(p) => p,
        Err(e @ Error::NotPtSymmetric { .. }) => return Err(e),
        Err(e) => return Ok(report.fail(Stage::Partner, e)),
    };
    report.partner = Some(partner.clone());
    report.diagnostics = Some(diag);

    let matrix = match fd_spectrum_richardson(h_pt, contour_pt, cfg.levels) {
        Ok(s) => s,
        Err(e) => return Ok(report.fail(Stage::PtSolve, e)),
    };
    let pt = match shoot_spectrum(h_pt, contour_pt, cfg.levels) {
        Ok(s) => s,
        Err(e) => {
            report.pt_matrix_spectrum = Some(matrix);
            return Ok(report.fail(Stage::PtSolve, e));
        }
    };
    report.cross_method_deviation = pt
        .eigenvalues
        .iter()
        .zip(&matrix.eigenvalues)
        .map(|(a, b)| (a - b).norm())
        .reduce(T::max);
    if let Ok(levels) = closed_form_levels(h_pt, cfg.levels) {
        report.exact = Some(pair_levels(
            &pt.eigenvalues,
            &levels,
            cfg.tol,
            PairingMode::Direct,
        ));
    }
    report.pt_matrix_spectrum = Some(matrix);
    report.pt_spectrum = Some(pt);

    let domain = match partner_domain(&partner, cfg) {
        Ok(d) => d,
        Err(e) => return Ok(report.fail(Stage::PartnerSolve, e)),
    };
    let partner_spec = match fd_spectrum_richardson(&partner, &domain.contour, cfg.levels) {
        Ok(s) => s,
        Err(e) => {
            report.partner_domain = Some(domain);
            return Ok(report.fail(Stage::PartnerSolve, e));
        }
    };
    report.partner_domain = Some(domain);
    let pt = report.pt_spectrum.as_ref().expect("set above");
    report.pairings = pair_all_modes(pt, &partner_spec, cfg.tol);
    report.verdict = best_verdict(&report.pairings);
    report.partner_spectrum = Some(partner_spec);
    Ok(report)
}

#[derive(Serialize)]
struct SpectrumWire {
    method: &'static str,
    eigenvalues: Vec<[f64; 2]>,
    residuals: Vec<f64>,
}

fn spectrum_wire<T: Real>(s: &Spectrum<T>) -> SpectrumWire {
    SpectrumWire {
        method: s.method.tag(),
        eigenvalues: s.eigenvalues.iter().map(|&z| to_pair(z)).collect(),
        residuals: s.residuals.iter().map(|r| r.as_f64()).collect(),
    }
}

#[derive(Serialize)]
struct DomainWire {
    kind: &'static str,
    x_min: f64,
    x_max: f64,
    n_points: usize,
    pole: Option<f64>,
}

#[derive(Serialize)]
struct DiagnosticsWire {
    pt_deviation: f64,
    reality_deviation: f64,
    real_axis_poles: Vec<f64>,
}

#[derive(Serialize)]
struct FailureWire {
    stage: Stage,
    error: String,
}

#[derive(Serialize)]
struct ReportWire {
    verdict: Verdict,
    pt_spectrum: Option<SpectrumWire>,
    pt_matrix_spectrum: Option<SpectrumWire>,
    cross_method_deviation: Option<f64>,
    partner: Option<serde_json::Value>,
    diagnostics: Option<DiagnosticsWire>,
    partner_domain: Option<DomainWire>,
    partner_spectrum: Option<SpectrumWire>,
    pairings: Vec<PairingWire>,
    exact: Option<PairingWire>,
    failure: Option<FailureWire>,
}

impl<T: Real> VerificationReport<T> {
    pub fn to_json(&self) -> String {
        let wire = ReportWire {
            verdict: self.verdict,
            pt_spectrum: self.pt_spectrum.as_ref().map(spectrum_wire),
            pt_matrix_spectrum: self.pt_matrix_spectrum.as_ref().map(spectrum_wire),
            cross_method_deviation: self.cross_method_deviation.map(Real::as_f64),
            partner: self
                .partner
                .as_ref()
                .map(|h| serde_json::from_str(&h.to_json()).expect("hamiltonian json parses")),
            diagnostics: self.diagnostics.as_ref().map(|d| DiagnosticsWire {
                pt_deviation: d.pt_deviation.as_f64(),
                reality_deviation: d.reality_deviation.as_f64(),
                real_axis_poles: d.real_axis_poles.iter().map(|p| p.as_f64()).collect(),
            }),
            partner_domain: self.partner_domain.as_ref().map(|d| DomainWire {
                kind: if d.pole.is_some() {
                    "half_line"
                } else {
                    "full_line"
                },
                x_min: d.contour.x_min().as_f64(),
                x_max: d.contour.x_max().as_f64(),
                n_points: d.contour.n_points,
                pole: d.pole.map(Real::as_f64),
            }),
            partner_spectrum: self.partner_spectrum.as_ref().map(spectrum_wire),
            pairings: self.pairings.iter().map(PairingReport::wire).collect(),
            exact: self.exact.as_ref().map(PairingReport::wire),
            failure: self.failure.as_ref().map(|f| FailureWire {
                stage: f.stage,
                error: f.error.to_string(),
            }),
        };
        let mut s = serde_json::to_string_pretty(&wire).expect("report serializes");
        s.push('\n');
        s
    }
}
