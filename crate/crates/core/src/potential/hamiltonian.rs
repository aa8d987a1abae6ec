use crate::error::{Error, Result};
use crate::scalar::Real;

use super::expr::PotentialExpr;

/// `H = p²/(2m) + V(x)` with ℏ = 1 and a signed, nonzero mass.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian<T> {
    mass: T,
    pub potential: PotentialExpr<T>,
}

impl<T: Real> Hamiltonian<T> {
    pub fn new(mass: T, potential: PotentialExpr<T>) -> Result<Self> {
        if mass == T::zero() || !mass.is_finite() {
            return Err(Error::InvalidInput(format!(
                "mass must be finite and nonzero, got {mass}"
            )));
        }
        Ok(Self { mass, potential })
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn hbar(&self) -> T {
        T::one()
    }

    /// Same potential, mass relabeled `m → −m`; potential values untouched.
    pub(crate) fn with_negated_mass(&self) -> Self {
        Self {
            mass: -self.mass,
            potential: self.potential.clone(),
        }
    }
}
