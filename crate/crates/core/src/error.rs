use thiserror::Error;

/// Errors raised by the library.
///
/// Physics disagreements (a failed isospectrality pairing, a deviation from
/// an orthonormality form) are never errors; they are reported as data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("evaluation point within {distance:e} of a pole at ({pole_re}, {pole_im})")]
    PoleProximity {
        pole_re: f64,
        pole_im: f64,
        distance: f64,
    },
    #[error("potential evaluation overflowed at ({re}, {im})")]
    NonFinite { re: f64, im: f64 },
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
    #[error("potential is not PT-symmetric (max deviation {max_deviation:e})")]
    NotPtSymmetric { max_deviation: f64 },
    #[error("rotated potential is not real on the axis (max |Im V| = {max_deviation:e})")]
    RotatedNotReal { max_deviation: f64 },
    #[error("term index {index} out of range for expression with {len} terms")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("coefficients do not form a power series: {0}")]
    NotPowerSeries(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("pole within {distance:e} of contour sample {sample}")]
    PoleOnContour { sample: usize, distance: f64 },
    #[error("contour has {n_points} points; at least 16 required")]
    ContourTooCoarse { n_points: usize },
    #[error("QR iteration did not converge at index {stuck_index} ({found} eigenvalues found)")]
    QrNoConvergence {
        stuck_index: usize,
        found: usize,
        partial: Vec<[f64; 2]>,
    },
    #[error("shooting overflow at energy ({re}, {im})")]
    Overflow { re: f64, im: f64 },
    #[error("only {found} of {requested} roots converged")]
    SpectrumIncomplete { found: usize, requested: usize },
    #[error("inverse iteration stalled (residual {residual:e})")]
    InverseIterationStall { residual: f64 },
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("no closed-form spectrum for this Hamiltonian: {0}")]
    NoClosedForm(String),
    #[error("too few points: {0}")]
    TooFewPoints(usize),
}

impl Error {
    /// True for failures of a numerical method (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::QrNoConvergence { .. }
                | Error::Overflow { .. }
                | Error::SpectrumIncomplete { .. }
                | Error::InverseIterationStall { .. }
                | Error::NonFinite { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
