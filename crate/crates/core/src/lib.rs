//! Non-Hermitian PT-symmetric Hamiltonians in one dimension, their
//! Hermitian partners, and numerical checks of the correspondence.
//!
//! * [`potential`]: a closed algebra of complex potentials with exact
//!   rotation, metric-series, mass-flip and coupling-flip maps.
//! * [`exact`]: closed-form spectra.
//! * [`solver`]: finite-difference operators on real or imaginary-shifted
//!   lines, Sturm bisection, complex QR, and Wronskian shooting.
//! * [`verify`]: spectrum pairing, orthonormality reports, and the
//!   end-to-end partner and mass-sign experiments.
//!
//! Everything is generic over the scalar type [`Real`] (`f32` or `f64`);
//! the `*64` and `*32` aliases below fix it.

pub mod error;
pub mod exact;
pub mod potential;
pub mod scalar;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Cx, Real};

pub type PotentialTerm64 = potential::PotentialTerm<f64>;
pub type PotentialExpr64 = potential::PotentialExpr<f64>;
pub type Hamiltonian64 = potential::Hamiltonian<f64>;
pub type Contour64 = solver::Contour<f64>;
pub type TridiagOperator64 = solver::TridiagOperator<f64>;
pub type Spectrum64 = solver::Spectrum<f64>;
pub type PairingReport64 = verify::PairingReport<f64>;
pub type OrthoReport64 = verify::OrthoReport<f64>;

pub type PotentialTerm32 = potential::PotentialTerm<f32>;
pub type PotentialExpr32 = potential::PotentialExpr<f32>;
pub type Hamiltonian32 = potential::Hamiltonian<f32>;
pub type Contour32 = solver::Contour<f32>;
pub type TridiagOperator32 = solver::TridiagOperator<f32>;
pub type Spectrum32 = solver::Spectrum<f32>;
pub type PairingReport32 = verify::PairingReport<f32>;
pub type OrthoReport32 = verify::OrthoReport<f32>;
