//! Builders for the named Hamiltonian families used throughout the crate.

use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};

use super::expr::PotentialExpr;
use super::hamiltonian::Hamiltonian;
use super::term::{MassScaling, PotentialTerm};

fn zero<T: Real>() -> Cx<T> {
    Cx::new(T::zero(), T::zero())
}

/// `p²/2m + (mω²/2) x²`, the potential declared proportional to `m`.
pub fn harmonic<T: Real>(mass: T, omega: T) -> Result<Hamiltonian<T>> {
    let k = mass * omega * omega / T::lit(2.0);
    Hamiltonian::new(
        mass,
        PotentialExpr::new(vec![PotentialTerm::shifted_power(
            Cx::new(k, T::zero()),
            zero(),
            2,
        )
        .with_mass_scaling(MassScaling::Proportional)]),
    )
}

/// Imaginary-shift oscillator with a regularized core,
/// `(mω²/2)(x − ic)² + G/(x − ic)²`, `G = (α² − 1/4)/(2m)`.
///
/// Both terms are mass-dependent; the core is omitted when `G = 0`.
pub fn shifted_oscillator<T: Real>(mass: T, omega: T, c: T, alpha: T) -> Result<Hamiltonian<T>> {
    if alpha < T::zero() {
        return Err(Error::InvalidInput("alpha must be non-negative".into()));
    }
    let shift = Cx::new(T::zero(), c);
    let k = mass * omega * omega / T::lit(2.0);
    let g = (alpha * alpha - T::lit(0.25)) / (T::lit(2.0) * mass);
    let mut v = PotentialExpr::new(vec![PotentialTerm::shifted_power(
        Cx::new(k, T::zero()),
        shift,
        2,
    )
    .with_mass_scaling(MassScaling::Proportional)]);
    if g != T::zero() {
        v = v.with(
            PotentialTerm::shifted_power(Cx::new(g, T::zero()), shift, -2)
                .with_mass_scaling(MassScaling::Inverse),
        );
    }
    Hamiltonian::new(mass, v)
}

/// `−g (ix)^ν`.
pub fn bender_boettcher<T: Real>(mass: T, g: T, nu: T) -> Result<Hamiltonian<T>> {
    if g <= T::zero() || nu < T::lit(2.0) {
        return Err(Error::InvalidInput(format!(
            "need g > 0 and nu >= 2, got g={g}, nu={nu}"
        )));
    }
    Hamiltonian::new(
        mass,
        PotentialExpr::new(vec![PotentialTerm::ix_power(g, nu)]),
    )
}

/// `−A sech²(x − ic)`.
pub fn sech_well<T: Real>(mass: T, a: T, c: T) -> Result<Hamiltonian<T>> {
    Hamiltonian::new(
        mass,
        PotentialExpr::new(vec![PotentialTerm::sech_squared(
            Cx::new(-a, T::zero()),
            Cx::new(T::zero(), c),
        )]),
    )
}

/// `B sec²(x − shift)` on a real shift.
pub fn trig_well<T: Real>(mass: T, b: T, shift: T) -> Result<Hamiltonian<T>> {
    Hamiltonian::new(
        mass,
        PotentialExpr::new(vec![PotentialTerm::sec_squared(
            Cx::new(b, T::zero()),
            Cx::new(shift, T::zero()),
        )]),
    )
}

/// `p² ± m² x² + i f x³` in units `2m = 1`.
pub fn cubic_mass_sign<T: Real>(m2: T, f: T, positive: bool) -> Result<Hamiltonian<T>> {
    let quad = if positive { m2 } else { -m2 };
    Hamiltonian::new(
        T::lit(0.5),
        PotentialExpr::new(vec![
            PotentialTerm::shifted_power(Cx::new(quad, T::zero()), zero(), 2),
            PotentialTerm::shifted_power(Cx::new(T::zero(), f), zero(), 3),
        ]),
    )
}

/// Zero potential.
pub fn free<T: Real>(mass: T) -> Result<Hamiltonian<T>> {
    Hamiltonian::new(mass, PotentialExpr::zero())
}
