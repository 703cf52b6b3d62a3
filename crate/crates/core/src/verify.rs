//! Residual reports shared by the verification routines.

use nalgebra::DMatrix;

/// Tolerance for operator identities on floating-point matrices.
pub const IDENTITY_TOL: f64 = 1e-10;
/// Tolerance for eigenvector residuals.
pub const EIGENVECTOR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.checks.push(Check {
            name: name.into(),
            residual,
            tolerance,
        });
    }

    /// Records an exact identity: residual 0 when it holds, `mismatch` otherwise.
    pub fn push_exact(&mut self, name: impl Into<String>, holds: bool, mismatch: f64) {
        let residual = if holds {
            0.0
        } else {
            mismatch.abs().max(f64::MIN_POSITIVE)
        };
        self.push(name, residual, 0.0);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.get(name).map(|c| c.residual)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

pub(crate) fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

pub(crate) fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// `max|lhs - rhs| / max(1, max|lhs|, max|rhs|)`.
///
/// Entries of the larger irreps grow like `N^(m+n)`, so residuals are taken
/// relative to the operands once those exceed unity.
pub(crate) fn scaled_residual(lhs: &DMatrix<f64>, rhs: &DMatrix<f64>) -> f64 {
    let scale = 1f64.max(max_abs(lhs)).max(max_abs(rhs));
    max_abs(&(lhs - rhs)) / scale
}
