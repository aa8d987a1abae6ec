//! Validated run description built from the command line.

use std::path::{Path, PathBuf};

use ptpartner::potential::TransformSpec;
use ptpartner::{Contour64, Hamiltonian64};

use crate::args::{Command, Experiment, Sign, SpectrumMethod};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Transform {
        map: TransformSpec<f64>,
    },
    Spectrum {
        method: SpectrumMethod,
        contour: Option<Contour64>,
        levels: usize,
        richardson: bool,
    },
    Verify {
        contour: Contour64,
        tol: f64,
        levels: usize,
        sign: Sign,
        strict: bool,
    },
    Ortho {
        contour: Contour64,
        levels: usize,
    },
    Znojil {
        m2: f64,
        f: f64,
        levels: usize,
        tol: f64,
        step: f64,
    },
    Convergence {
        contour: Contour64,
        levels: usize,
        grids: usize,
        svg: Option<PathBuf>,
    },
}

/// Everything a run needs; inputs exist and numbers are in range.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub task: Task,
    pub input: Option<PathBuf>,
    pub out: PathBuf,
    pub format: Format,
}

impl RunConfig {
    pub fn from_command(cmd: Command) -> CliResult<Self> {
        let cfg = match cmd {
            Command::Transform { input, map, out } => RunConfig {
                task: Task::Transform {
                    map: parse_map(&map)?,
                },
                input: Some(input),
                out,
                format: Format::Json,
            },
            Command::Spectrum {
                input,
                method,
                contour,
                levels,
                richardson,
                out,
            } => {
                let contour = contour.as_deref().map(parse_contour).transpose()?;
                if contour.is_none() && method != SpectrumMethod::Exact {
                    return Err(CliError::usage("--contour is required for fd and shoot"));
                }
                RunConfig {
                    task: Task::Spectrum {
                        method,
                        contour,
                        levels: positive_count("levels", levels)?,
                        richardson,
                    },
                    input: Some(input),
                    out,
                    format: Format::Csv,
                }
            }
            Command::Verify {
                pt,
                contour,
                tol,
                levels,
                sign,
                strict,
                out,
            } => RunConfig {
                task: Task::Verify {
                    contour: parse_contour(&contour)?,
                    tol: positive("tol", tol)?,
                    levels: positive_count("levels", levels)?,
                    sign,
                    strict,
                },
                input: Some(pt),
                out,
                format: Format::Json,
            },
            Command::Ortho {
                input,
                contour,
                levels,
                out,
            } => RunConfig {
                task: Task::Ortho {
                    contour: parse_contour(&contour)?,
                    levels: positive_count("levels", levels)?,
                },
                input: Some(input),
                out,
                format: Format::Json,
            },
            Command::Experiment(Experiment::Znojil {
                m2,
                f,
                levels,
                tol,
                step,
                out,
            }) => RunConfig {
                task: Task::Znojil {
                    m2: finite("m2", m2)?,
                    f: finite("f", f)?,
                    levels: positive_count("levels", levels)?,
                    tol: positive("tol", tol)?,
                    step: positive("step", step)?,
                },
                input: None,
                out,
                format: Format::Json,
            },
            Command::Experiment(Experiment::Convergence {
                input,
                levels,
                contour,
                grids,
                out,
                svg,
            }) => {
                if grids < 3 {
                    return Err(CliError::usage("--grids must be at least 3"));
                }
                RunConfig {
                    task: Task::Convergence {
                        contour: parse_contour(&contour)?,
                        levels: positive_count("levels", levels)?,
                        grids,
                        svg,
                    },
                    input: Some(input),
                    out,
                    format: Format::Csv,
                }
            }
        };
        if let Some(p) = &cfg.input {
            if !p.is_file() {
                return Err(CliError::usage(format!(
                    "input file {} does not exist",
                    p.display()
                )));
            }
        }
        Ok(cfg)
    }

    pub fn read_hamiltonian(&self) -> CliResult<Hamiltonian64> {
        let path = self
            .input
            .as_deref()
            .ok_or_else(|| CliError::usage("no input file for this command"))?;
        read_hamiltonian(path)
    }
}

pub fn read_hamiltonian(path: &Path) -> CliResult<Hamiltonian64> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(Hamiltonian64::from_json(&text)?)
}

fn finite(name: &str, x: f64) -> CliResult<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::usage(format!("--{name} must be finite")))
    }
}

fn positive(name: &str, x: f64) -> CliResult<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(CliError::usage(format!(
            "--{name} must be positive, got {x}"
        )))
    }
}

fn positive_count(name: &str, n: usize) -> CliResult<usize> {
    if n > 0 {
        Ok(n)
    } else {
        Err(CliError::usage(format!("--{name} must be at least 1")))
    }
}

fn number(field: &str, s: &str) -> CliResult<f64> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad number {s:?} for {field}")))?;
    finite(field, x)
}

/// `real:<xmin>:<xmax>:<N>` or `shifted:<xmin>:<xmax>:<c>:<N>`, where `c`
/// is the imaginary offset of the line.
pub fn parse_contour(s: &str) -> CliResult<Contour64> {
    let parts: Vec<&str> = s.split(':').collect();
    let count = |p: &str| -> CliResult<usize> {
        p.trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad point count {p:?} in contour {s:?}")))
    };
    let c = match parts.as_slice() {
        ["real", lo, hi, n] => {
            Contour64::real(number("xmin", lo)?, number("xmax", hi)?, count(n)?)?
        }
        ["shifted", lo, hi, c, n] => Contour64::shifted(
            number("xmin", lo)?,
            number("xmax", hi)?,
            number("c", c)?,
            count(n)?,
        )?,
        _ => {
            return Err(CliError::usage(format!(
                "contour {s:?} is neither real:<xmin>:<xmax>:<N> nor shifted:<xmin>:<xmax>:<c>:<N>"
            )))
        }
    };
    Ok(c)
}

/// `rotate-minus | rotate-plus | eta:<beta> | mass-flip | coupling-flip:<i>`
pub fn parse_map(s: &str) -> CliResult<TransformSpec<f64>> {
    let spec = match s.split_once(':') {
        None => match s {
            "rotate-minus" => TransformSpec::RotateMinus,
            "rotate-plus" => TransformSpec::RotatePlus,
            "mass-flip" => TransformSpec::MassFlip,
            _ => return Err(CliError::usage(format!("unknown map {s:?}"))),
        },
        Some(("eta", beta)) => TransformSpec::EtaSeries(number("beta", beta)?),
        Some(("coupling-flip", i)) => TransformSpec::CouplingFlip(
            i.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad term index {i:?}")))?,
        ),
        Some(_) => return Err(CliError::usage(format!("unknown map {s:?}"))),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contours() {
        let c = parse_contour("shifted:-12:12:-1:4000").unwrap();
        assert_eq!(c.n_points, 4000);
        assert_eq!(c.imag_offset(), -1.0);
        assert_eq!(parse_contour("real:0:3.5:100").unwrap().x_max(), 3.5);
        for bad in [
            "real:1:0:100",
            "real:0:1",
            "line:0:1:100",
            "real:0:1:x",
            "real:0:inf:100",
        ] {
            assert!(parse_contour(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn maps() {
        assert_eq!(
            parse_map("rotate-minus").unwrap(),
            TransformSpec::RotateMinus
        );
        assert_eq!(parse_map("eta:0.5").unwrap(), TransformSpec::EtaSeries(0.5));
        assert_eq!(
            parse_map("coupling-flip:2").unwrap(),
            TransformSpec::CouplingFlip(2)
        );
        assert!(parse_map("coupling-flip:-1").is_err());
        assert!(parse_map("eta:nan").is_err());
        assert!(parse_map("flip").is_err());
    }
}
