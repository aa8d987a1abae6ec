//! Verification reports: spectrum pairing, Gram matrices, and the two
//! end-to-end experiments.

pub mod ortho;
pub mod pairing;
pub mod proposition;
pub mod znojil;

pub use ortho::{ortho_check, OrthoReport};
pub use pairing::{
    best_verdict, fit_shift, pair_all_modes, pair_levels, pair_spectra, PairingMode, PairingReport,
    Verdict,
};
pub use proposition::{
    verify_proposition, PartnerDomain, PropositionConfig, Stage, StageFailure, VerificationReport,
};
pub use znojil::{znojil_duality, SideReport, ZnojilConfig, ZnojilReport};
