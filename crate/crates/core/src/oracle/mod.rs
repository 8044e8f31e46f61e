//! Independent numerical checks of the algebraic spectra.
//!
//! Nothing here calls into [`crate::solver`] or [`crate::models`] (the report
//! only reads the plain [`crate::spectrum`] types); the only
//! algebraic input is the oscillator ladder used to build the position matrix.

pub mod angular;
pub mod dirac;
pub mod eigen;
pub mod grid;
pub mod perturbation;
pub mod radial;
pub mod report;

pub use angular::jx_eigenvalues;
pub use dirac::{solve_dirac_radial, DiracOracleConfig};
pub use eigen::{eig_symmetric, eig_tridiagonal, tridiagonalize, TridiagonalOperator};
pub use grid::Grid;
pub use perturbation::{first_order_shifts, solve_perturbed_ho};
pub use radial::{solve_hydrogen_radial, solve_oscillator_1d, solve_oscillator_radial, solve_square_well};
pub use report::{compare, NumericSpectrum, OracleReport};
