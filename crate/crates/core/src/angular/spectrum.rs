use nalgebra::DMatrix;
use num_complex::Complex64;

use super::tridiag::symmetric_tridiagonal_eigenvalues;
use crate::algebra::{build_irrep, structure_function, Form};
use crate::error::{Error, Result};
use crate::oscillator::{irrep_members, CartesianState, FrequencyRatio, IrrepLabel};
use crate::poly::to_f64;
use crate::verify::EIGENVECTOR_TOL;

/// Eigenvalues of `L0 = -i (S_+ - S_-)` on one irrep, ascending.
///
/// The `i`-th eigenvalue carries the label `m = -N + 2i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularSpectrum {
    pub label: IrrepLabel,
    pub eigenvalues: Vec<f64>,
}

impl AngularSpectrum {
    pub fn labels(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let level = self.label.level as i64;
        self.eigenvalues
            .iter()
            .enumerate()
            .map(move |(i, &ell)| (-level + 2 * i as i64, ell))
    }

    /// Eigenvalue with label `m` in `-N, -N + 2, ..., N`.
    pub fn by_label(&self, m: i64) -> Option<f64> {
        let offset = m + self.label.level as i64;
        if offset < 0 || offset % 2 != 0 {
            return None;
        }
        self.eigenvalues.get((offset / 2) as usize).copied()
    }

    /// `max_i |ell_i + ell_{N-i}|`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.eigenvalues.len();
        (0..n)
            .map(|i| (self.eigenvalues[i] + self.eigenvalues[n - 1 - i]).abs())
            .fold(0.0, f64::max)
    }
}

fn phi_values(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Vec<f64>> {
    let sf = structure_function(label, ratio, Form::Product)?;
    Ok((0..=label.level + 1).map(|k| to_f64(&sf.at(k))).collect())
}

pub fn angular_eigenvalues(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<AngularSpectrum> {
    let phi = phi_values(label, ratio)?;
    let off: Vec<f64> = phi[1..=label.level as usize].iter().map(|p| p.sqrt()).collect();
    let diag = vec![0.0; label.dimension()];
    let eigenvalues = symmetric_tridiagonal_eigenvalues(&diag, &off)?;

    let top = eigenvalues.iter().fold(1f64, |acc, x| acc.max(x.abs()));
    for pair in eigenvalues.windows(2) {
        if pair[1] - pair[0] <= 1e-12 * top {
            return Err(Error::DegenerateSpectrum {
                lower: pair[0],
                upper: pair[1],
            });
        }
    }
    Ok(AngularSpectrum {
        label: *label,
        eigenvalues,
    })
}

/// Number of roots of `ell -> H_{N+1}(ell / sqrt 2)` strictly below `ell`.
///
/// Counts negative ratios `H_{k+1} / H_k` (up to positive scale), i.e. the
/// negative pivots of `L0 - ell` in the Fock basis.
fn roots_below(phi: &[f64], ell: f64) -> usize {
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut pivot = 1.0f64;
    for (k, &p) in phi.iter().enumerate() {
        let coupling = if k == 0 { 0.0 } else { p / pivot };
        pivot = -ell - coupling;
        if pivot == 0.0 {
            pivot = -tiny;
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// Roots of `H_{N+1}(ell / sqrt 2)` by Sturm-sequence bisection.
pub fn eigenvalues_by_bisection(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Vec<f64>> {
    let phi = phi_values(label, ratio)?;
    let phi = &phi[..=label.level as usize];
    let n = label.dimension();
    let bound = 2.0 * phi.iter().fold(0f64, |acc, p| acc.max(p.sqrt())) + 1.0;

    let mut roots = Vec::with_capacity(n);
    for j in 0..n {
        // invariant: roots_below(lo) <= j < roots_below(hi)
        let (mut lo, mut hi) = (-bound, bound);
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if roots_below(phi, mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    Ok(roots)
}

/// `L0 = -i (S_+ - S_-)` in the irrep basis.
pub fn build_l0(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<DMatrix<Complex64>> {
    let rep = build_irrep(label, ratio)?;
    let dim = rep.dim();
    Ok(DMatrix::from_fn(dim, dim, |i, j| {
        Complex64::new(0.0, -(rep.s_plus[(i, j)] - rep.s_minus[(i, j)]))
    }))
}

/// Spectrum of [`build_l0`] from a dense Hermitian eigensolver.
pub fn eigenvalues_dense(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Vec<f64>> {
    let l0 = build_l0(label, ratio)?;
    let mut ev: Vec<f64> = l0.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Eigenvector `|ell> = sum_k i^k c_k / sqrt([k]!) |N,(p,q),k>`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularEigenvector {
    pub label: IrrepLabel,
    pub ell: f64,
    /// `c_k = (-1)^k 2^(-k/2) H_k(ell / sqrt 2) / norm`.
    pub coefficients: Vec<f64>,
    /// Normalization making the amplitudes a unit vector.
    pub norm: f64,
    /// Amplitudes on `|N,(p,q),k>`.
    pub amplitudes: Vec<Complex64>,
    /// The same amplitudes on the Cartesian members, ordered by `k`.
    pub cartesian: Vec<(CartesianState, Complex64)>,
    /// `max |(L0 v - ell v)_k|`.
    pub residual: f64,
}

pub fn angular_eigenvector(label: &IrrepLabel, ratio: &FrequencyRatio, ell: f64) -> Result<AngularEigenvector> {
    let sf = structure_function(label, ratio, Form::Product)?;
    let level = label.level as usize;
    let factorial: Vec<f64> = (0..=level).map(|k| to_f64(&sf.factorial(k as u32))).collect();
    // b[k] couples k - 1 and k; b[0] = b[N + 1] = 0
    let b: Vec<f64> = (0..=level + 1).map(|k| to_f64(&sf.at(k as u32)).sqrt()).collect();

    let x = twisted_solve(&b, ell);
    let residual = tridiagonal_residual(&b, &x, ell);
    if residual.is_nan() || residual > EIGENVECTOR_TOL {
        return Err(Error::NotAnEigenvalue { ell, residual });
    }

    // x_k = G_k / (sqrt([k]!) norm) with G_0 = 1
    let norm = 1.0 / x[0];
    let coefficients: Vec<f64> = (0..=level)
        .map(|k| if k % 2 == 0 { x[k] } else { -x[k] } * factorial[k].sqrt())
        .collect();
    let amplitudes: Vec<Complex64> = x
        .iter()
        .enumerate()
        .map(|(k, xk)| Complex64::i().powu(3 * k as u32) * *xk)
        .collect();
    let cartesian = irrep_members(label, ratio)?
        .into_iter()
        .zip(amplitudes.iter().copied())
        .collect();
    Ok(AngularEigenvector {
        label: *label,
        ell,
        coefficients,
        norm,
        amplitudes,
        cartesian,
        residual,
    })
}

/// Unit eigenvector of the zero-diagonal tridiagonal matrix with couplings
/// `b`, with positive first component.
///
/// The three-term recurrence is run from both ends and joined at the row
/// leaving the smallest residual.
fn twisted_solve(b: &[f64], ell: f64) -> Vec<f64> {
    let n = b.len() - 1;
    let mut fwd = vec![0.0; n];
    fwd[0] = 1.0;
    for k in 1..n {
        let prev = if k >= 2 { b[k - 1] * fwd[k - 2] } else { 0.0 };
        fwd[k] = (ell * fwd[k - 1] - prev) / b[k];
    }
    let mut bwd = vec![0.0; n];
    bwd[n - 1] = 1.0;
    for k in (0..n - 1).rev() {
        let next = if k + 2 < n { b[k + 2] * bwd[k + 2] } else { 0.0 };
        bwd[k] = (ell * bwd[k + 1] - next) / b[k + 1];
    }

    let mut best: Option<(f64, Vec<f64>)> = None;
    for r in 0..n {
        if fwd[r] == 0.0 || bwd[r] == 0.0 || !fwd[r].is_finite() || !bwd[r].is_finite() {
            continue;
        }
        let mut x: Vec<f64> = (0..n)
            .map(|k| if k <= r { fwd[k] / fwd[r] } else { bwd[k] / bwd[r] })
            .collect();
        let len = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= len);
        let res = tridiagonal_residual(b, &x, ell);
        if best.as_ref().is_none_or(|(r0, _)| res < *r0) {
            best = Some((res, x));
        }
    }
    let mut x = best.map_or_else(|| fwd.clone(), |(_, x)| x);
    if x[0] < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    x
}

/// `max_k |(T x)_k - ell x_k|`.
fn tridiagonal_residual(b: &[f64], x: &[f64], ell: f64) -> f64 {
    let n = x.len();
    (0..n)
        .map(|k| {
            let below = if k > 0 { b[k] * x[k - 1] } else { 0.0 };
            let above = if k + 1 < n { b[k + 1] * x[k + 1] } else { 0.0 };
            (below + above - ell * x[k]).abs()
        })
        .fold(0.0, f64::max)
}

/// Eigenvectors for the whole spectrum, in ascending order of `ell`.
pub fn angular_basis(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Vec<AngularEigenvector>> {
    angular_eigenvalues(label, ratio)?
        .eigenvalues
        .iter()
        .map(|&ell| angular_eigenvector(label, ratio, ell))
        .collect()
}
