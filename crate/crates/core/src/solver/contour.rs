use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};

/// Minimum number of contour samples accepted by the discretizers.
pub const MIN_POINTS: usize = 16;

/// Shape of the path in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourKind<T> {
    RealLine {
        x_min: T,
        x_max: T,
    },
    /// `Im z = imag_offset`.
    ShiftedLine {
        x_min: T,
        x_max: T,
        imag_offset: T,
    },
}

/// Uniformly sampled horizontal line; sample `k` sits at
/// `x_min + k·h + i·imag_offset` with `h = (x_max − x_min)/(n_points − 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contour<T> {
    pub kind: ContourKind<T>,
    pub n_points: usize,
}

impl<T: Real> Contour<T> {
    pub fn real(x_min: T, x_max: T, n_points: usize) -> Result<Self> {
        Self::validated(ContourKind::RealLine { x_min, x_max }, n_points)
    }

    pub fn shifted(x_min: T, x_max: T, imag_offset: T, n_points: usize) -> Result<Self> {
        Self::validated(
            ContourKind::ShiftedLine {
                x_min,
                x_max,
                imag_offset,
            },
            n_points,
        )
    }

    fn validated(kind: ContourKind<T>, n_points: usize) -> Result<Self> {
        let c = Self { kind, n_points };
        let (lo, hi) = c.interval();
        if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less)
            || !lo.is_finite()
            || !hi.is_finite()
            || !c.imag_offset().is_finite()
        {
            return Err(Error::InvalidInput(format!(
                "contour needs x_min < x_max, got [{lo}, {hi}]"
            )));
        }
        Ok(c)
    }

    pub fn interval(&self) -> (T, T) {
        match self.kind {
            ContourKind::RealLine { x_min, x_max }
            | ContourKind::ShiftedLine { x_min, x_max, .. } => (x_min, x_max),
        }
    }

    pub fn x_min(&self) -> T {
        self.interval().0
    }

    pub fn x_max(&self) -> T {
        self.interval().1
    }

    pub fn imag_offset(&self) -> T {
        match self.kind {
            ContourKind::RealLine { .. } => T::zero(),
            ContourKind::ShiftedLine { imag_offset, .. } => imag_offset,
        }
    }

    pub fn kind_tag(&self) -> &'static str {
        match self.kind {
            ContourKind::RealLine { .. } => "real",
            ContourKind::ShiftedLine { .. } => "shifted",
        }
    }

    pub fn is_real(&self) -> bool {
        self.imag_offset() == T::zero()
    }

    pub fn step(&self) -> T {
        let (lo, hi) = self.interval();
        (hi - lo) / T::from_count(self.n_points.saturating_sub(1).max(1))
    }

    /// Real coordinate along the contour of sample `k`.
    pub fn param(&self, k: usize) -> T {
        self.x_min() + T::from_count(k) * self.step()
    }

    pub fn point(&self, k: usize) -> Cx<T> {
        Cx::new(self.param(k), self.imag_offset())
    }

    /// Point at real coordinate `t` (not necessarily a sample).
    pub fn at(&self, t: T) -> Cx<T> {
        Cx::new(t, self.imag_offset())
    }

    /// Same line with a different number of samples.
    pub fn with_points(&self, n_points: usize) -> Self {
        Self {
            kind: self.kind,
            n_points,
        }
    }

    /// Same line with the step halved.
    pub fn refined(&self) -> Self {
        self.with_points(2 * self.n_points - 1)
    }

    pub fn with_interval(&self, x_min: T, x_max: T) -> Result<Self> {
        let kind = match self.kind {
            ContourKind::RealLine { .. } => ContourKind::RealLine { x_min, x_max },
            ContourKind::ShiftedLine { imag_offset, .. } => ContourKind::ShiftedLine {
                x_min,
                x_max,
                imag_offset,
            },
        };
        Self::validated(kind, self.n_points)
    }

    /// Whether sample reversal realizes `x → −x` on the real coordinate.
    pub fn is_symmetric(&self) -> bool {
        let (lo, hi) = self.interval();
        (lo + hi).abs() <= T::tol(1e-12) * (lo.abs() + hi.abs())
    }
}
