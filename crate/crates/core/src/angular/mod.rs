//! The "angular momentum" `L0 = -i (S_+ - S_-)`, its spectrum and eigenbasis.
//!
//! In the irrep basis `L0` is tridiagonal with off-diagonal magnitudes
//! `sqrt(Phi(k))`, so its characteristic polynomials obey the generalized
//! Hermite recurrence. The eigenvalues come from a tridiagonal QL solve; root
//! bisection on `H_{N+1}` and a dense Hermitian solve serve as cross-checks.

mod hermite;
mod spectrum;
mod tridiag;

pub use hermite::{hermite_sequence, GeneralizedHermite};
pub use spectrum::{
    angular_basis, angular_eigenvalues, angular_eigenvector, build_l0, eigenvalues_by_bisection, eigenvalues_dense,
    AngularEigenvector, AngularSpectrum,
};
pub use tridiag::symmetric_tridiagonal_eigenvalues;
