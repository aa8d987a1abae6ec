//! Potentials, Hamiltonians, and the closed transformations between them.

pub mod expr;
pub mod families;
pub mod hamiltonian;
pub mod json;
pub mod term;
pub mod transform;

pub use expr::{
    check_pt_symmetry, check_real_on_axis, default_symmetric_grid, eval_potential, GridCheck,
    PotentialExpr,
};
pub use hamiltonian::Hamiltonian;
pub use term::{MassScaling, PotentialTerm, TermShape, POLE_TOLERANCE};
pub use transform::{
    coupling_flip, eta_series, eta_transform, hermitian_partner, mass_flip, rotate_potential,
    PartnerDiagnostics, RotationSign, TransformSpec,
};
