use ptpartner::potential::RotationSign;
use ptpartner::solver::{
    convergence_study, discretize, eigenvector_inverse_iteration, exact_spectrum, fd_spectrum,
    fd_spectrum_richardson, matrix_eigenvalues, shoot_spectrum, spectrum::num,
};
use ptpartner::verify::{
    ortho_check, verify_proposition, znojil_duality, PropositionConfig, Verdict, ZnojilConfig,
};
use ptpartner::{Error, Hamiltonian64};

use crate::args::{Sign, SpectrumMethod};
use crate::config::{RunConfig, Task};
use crate::error::{exit, CliError, CliResult};
use crate::output::write_atomic;
use crate::svg::emit_svg_convergence;

/// Runs a validated config; returns the exit code on success paths.
pub fn execute(cfg: &RunConfig) -> CliResult<u8> {
    match &cfg.task {
        Task::Transform { map } => {
            let h = cfg.read_hamiltonian()?;
            let out = map.apply(&h)?;
            write_atomic(&cfg.out, &out.to_canonical_json())?;
            Ok(exit::OK)
        }
        Task::Spectrum {
            method,
            contour,
            levels,
            richardson,
        } => {
            let h = cfg.read_hamiltonian()?;
            let s = match (method, contour) {
                (SpectrumMethod::Exact, c) => exact_spectrum(&h, *levels, *c)?,
                (SpectrumMethod::Fd, Some(c)) if *richardson => {
                    fd_spectrum_richardson(&h, c, *levels)?
                }
                (SpectrumMethod::Fd, Some(c)) => fd_spectrum(&h, c, *levels)?,
                (SpectrumMethod::Shoot, Some(c)) => shoot_spectrum(&h, c, *levels)?,
                (_, None) => return Err(CliError::usage("--contour is required for fd and shoot")),
            };
            write_atomic(&cfg.out, &s.to_csv())?;
            Ok(exit::OK)
        }
        Task::Verify {
            contour,
            tol,
            levels,
            sign,
            strict,
        } => {
            let h = cfg.read_hamiltonian()?;
            let pcfg = PropositionConfig {
                levels: *levels,
                tol: *tol,
                sign: match sign {
                    Sign::Minus => RotationSign::Minus,
                    Sign::Plus => RotationSign::Plus,
                },
                ..Default::default()
            };
            let report = verify_proposition(&h, contour, &pcfg)?;
            write_atomic(&cfg.out, &report.to_json())?;
            if let Some(f) = &report.failure {
                eprintln!("ptpartner: verify stopped at {:?}: {}", f.stage, f.error);
                return Ok(CliError::Lib(f.error.clone()).exit_code());
            }
            Ok(if *strict && report.verdict == Verdict::Failed {
                exit::VERDICT_FAILED
            } else {
                exit::OK
            })
        }
        Task::Ortho { contour, levels } => {
            let h = cfg.read_hamiltonian()?;
            let op = discretize(&h, contour)?;
            let (ev, _) = matrix_eigenvalues(&op, *levels)?;
            let vecs = ev
                .iter()
                .map(|&l| eigenvector_inverse_iteration(&op, l).map(|v| v.values))
                .collect::<Result<Vec<_>, Error>>()?;
            let report = ortho_check(&vecs, contour)?;
            write_atomic(&cfg.out, &report.to_json())?;
            Ok(exit::OK)
        }
        Task::Znojil {
            m2,
            f,
            levels,
            tol,
            step,
        } => {
            let zcfg = ZnojilConfig {
                levels: *levels,
                tol: *tol,
                step: *step,
                ..Default::default()
            };
            let report = znojil_duality(*m2, *f, &zcfg)?;
            write_atomic(&cfg.out, &report.to_json(&zcfg))?;
            Ok(exit::OK)
        }
        Task::Convergence {
            contour,
            levels,
            grids,
            svg,
        } => {
            let h = cfg.read_hamiltonian()?;
            let (csv, plot) = convergence_table(&h, contour, *levels, *grids)?;
            if let Some(path) = svg {
                write_atomic(path, &emit_svg_convergence(&plot)?)?;
            }
            write_atomic(&cfg.out, &csv)?;
            Ok(exit::OK)
        }
    }
}

/// CSV `level,n_points,h,value,error,order` over grids `N, 2N, 4N, …`,
/// plus the `(h, error)` points of the lowest level.
fn convergence_table(
    h: &Hamiltonian64,
    template: &ptpartner::Contour64,
    levels: usize,
    grids: usize,
) -> CliResult<(String, Vec<(f64, f64)>)> {
    let n_list: Vec<usize> = (0..grids).map(|k| template.n_points << k).collect();
    let mut csv = String::from("level,n_points,h,value,error,order\n");
    let mut plot = Vec::new();
    for level in 0..levels {
        let s = convergence_study(h, template, &n_list, level)?;
        for i in 0..s.n_points.len() {
            csv.push_str(&format!(
                "{level},{},{},{},{},{}\n",
                s.n_points[i],
                num(s.steps[i]),
                num(s.values[i]),
                num(s.errors[i]),
                num(s.order)
            ));
            if level == 0 {
                plot.push((s.steps[i], s.errors[i]));
            }
        }
    }
    Ok((csv, plot))
}
