//! Deformed `u(2)` symmetry algebra of the two-dimensional anisotropic
//! harmonic oscillator with frequency ratio `m:n`.
//!
//! * [`oscillator`]: exact spectra and the Cartesian <-> irrep label maps.
//! * [`algebra`]: structure functions, commutator polynomials, irrep matrices,
//!   identity checks and a Cartesian Fock-space oracle.
//! * [`angular`]: the "angular momentum" operator, its spectrum and eigenvectors.

pub mod algebra;
pub mod angular;
pub mod error;
pub mod oscillator;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use oscillator::{
    cartesian_to_irrep, energy_of_cartesian, energy_of_irrep, enumerate_levels, irrep_members, irrep_to_cartesian,
    make_ratio, s0_shift, CartesianState, Energy, FrequencyRatio, IrrepLabel, IrrepState, Level,
};
pub use verify::{Check, VerificationReport, EIGENVECTOR_TOL, IDENTITY_TOL};
