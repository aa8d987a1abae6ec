//! Finite-difference, QR, bisection and shooting solvers on horizontal
//! contours in the complex plane.

pub mod contour;
pub mod convergence;
pub mod inverse;
pub mod operator;
pub mod qr;
pub mod shooting;
pub mod spectrum;
pub mod sturm;

pub use contour::{Contour, ContourKind, MIN_POINTS};
pub use convergence::{convergence_study, fit_convergence_order, ConvergenceStudy, OrderFit};
pub use inverse::{eigenvector_inverse_iteration, Eigenvector};
pub use operator::{discretize, TridiagOperator, CONTOUR_POLE_TOLERANCE};
pub use qr::{complex_tridiag_eigenvalues, eig_complex_tridiag, eig_complex_tridiag_top};
pub use shooting::{shoot_find, shoot_refine, shoot_residual, ShootingGrid, ShootingResult};
pub use spectrum::{
    exact_spectrum, fd_spectrum, fd_spectrum_richardson, matrix_eigenvalues, shoot_spectrum,
    Method, Spectrum,
};
pub use sturm::{eig_sym_tridiag, eig_sym_tridiag_top, sturm_count};
