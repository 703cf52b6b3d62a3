//! Dense matrix realization of `S0, S_+, S_-, H` on one irrep and the
//! identity checks run against it.

use nalgebra::DMatrix;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use super::commutator::{commutator_polynomial, CommutatorPolynomial};
use super::structure::{structure_function, Form, StructureFunction};
use crate::error::{Error, Result};
use crate::oscillator::{energy_of_irrep, s0_shift, Energy, FrequencyRatio, IrrepLabel};
use crate::poly::{int, rat, to_f64, BiPoly, Rational};
use crate::verify::{commutator, scaled_residual, VerificationReport, IDENTITY_TOL};

/// Matrices in the basis `|N,(p,q),k>`, `k = 0..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrepMatrices {
    pub label: IrrepLabel,
    pub ratio: FrequencyRatio,
    pub energy: Energy,
    /// `S0 = k + u` on the irrep.
    pub u: Rational64,
    /// `Phi(0), ..., Phi(N + 1)`.
    pub phi: Vec<Rational>,
    pub s0: DMatrix<f64>,
    pub s_plus: DMatrix<f64>,
    pub s_minus: DMatrix<f64>,
    pub h: DMatrix<f64>,
    /// Number operator `S0 - u`.
    pub number: DMatrix<f64>,
}

impl IrrepMatrices {
    pub fn dim(&self) -> usize {
        self.label.dimension()
    }

    pub fn structure_function(&self) -> StructureFunction {
        structure_function(&self.label, &self.ratio, Form::Product).expect("validated label")
    }

    /// `S0` diagonal as exact rationals.
    pub fn s0_exact(&self) -> Vec<Rational64> {
        (0..=self.label.level as i64)
            .map(|k| Rational64::from_integer(k) + self.u)
            .collect()
    }
}

pub fn build_irrep(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<IrrepMatrices> {
    let sf = structure_function(label, ratio, Form::Product)?;
    let energy = energy_of_irrep(label, ratio)?;
    let u = s0_shift(label, ratio)?;
    let phi = sf.values();
    let dim = label.dimension();
    let u_f = *u.numer() as f64 / *u.denom() as f64;

    let s0 = DMatrix::from_fn(dim, dim, |i, j| if i == j { i as f64 + u_f } else { 0.0 });
    let s_plus = DMatrix::from_fn(dim, dim, |i, j| if i == j + 1 { to_f64(&phi[i]).sqrt() } else { 0.0 });
    let s_minus = s_plus.transpose();
    let h = DMatrix::identity(dim, dim) * energy.to_f64();
    let number = DMatrix::from_fn(dim, dim, |i, j| if i == j { i as f64 } else { 0.0 });

    Ok(IrrepMatrices {
        label: *label,
        ratio: *ratio,
        energy,
        u,
        phi,
        s0,
        s_plus,
        s_minus,
        h,
        number,
    })
}

/// `sum c_ab H^a S0^b` with the operators substituted as matrices.
pub fn eval_matrix_poly(poly: &BiPoly, h: &DMatrix<f64>, s0: &DMatrix<f64>) -> DMatrix<f64> {
    let dim = h.nrows();
    let powers = |base: &DMatrix<f64>, max: u32| {
        let mut out = vec![DMatrix::identity(dim, dim)];
        for _ in 0..max {
            let next = out.last().unwrap() * base;
            out.push(next);
        }
        out
    };
    let h_pow = powers(h, poly.degree_h().unwrap_or(0));
    let s_pow = powers(s0, poly.degree_s0().unwrap_or(0));
    let mut acc = DMatrix::zeros(dim, dim);
    for (a, b, c) in poly.terms() {
        acc += (&h_pow[a as usize] * &s_pow[b as usize]) * to_f64(c);
    }
    acc
}

fn check_shapes(rep: &IrrepMatrices) -> Result<usize> {
    let dim = rep.s0.nrows();
    for (name, m) in [
        ("S0", &rep.s0),
        ("S+", &rep.s_plus),
        ("S-", &rep.s_minus),
        ("H", &rep.h),
    ] {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::ShapeMismatch(format!(
                "{name} is {}x{}, expected {dim}x{dim}",
                m.nrows(),
                m.ncols()
            )));
        }
    }
    Ok(dim)
}

pub fn verify_algebra(rep: &IrrepMatrices) -> Result<VerificationReport> {
    verify_algebra_with_tol(rep, IDENTITY_TOL)
}

/// Residuals of the `u(2)`-type relations on `rep`.
///
/// Floating checks compare matrices; the `*_exact` checks recompute the
/// squared relations from the label in rational arithmetic.
pub fn verify_algebra_with_tol(rep: &IrrepMatrices, tol: f64) -> Result<VerificationReport> {
    check_shapes(rep)?;
    let cp = commutator_polynomial(&rep.ratio);
    let mut report = VerificationReport::new();

    report.push(
        "s0_splus",
        scaled_residual(&commutator(&rep.s0, &rep.s_plus), &rep.s_plus),
        tol,
    );
    report.push(
        "s0_sminus",
        scaled_residual(&commutator(&rep.s0, &rep.s_minus), &(-&rep.s_minus)),
        tol,
    );
    let zero = DMatrix::zeros(rep.h.nrows(), rep.h.ncols());
    let central = [&rep.s0, &rep.s_plus, &rep.s_minus]
        .iter()
        .map(|s| scaled_residual(&commutator(&rep.h, s), &zero))
        .fold(0.0, f64::max);
    report.push("h_central", central, tol);

    let lhs = commutator(&rep.s_minus, &rep.s_plus);
    let rhs = eval_matrix_poly(cp.polynomial(), &rep.h, &rep.s0);
    report.push("commutator", scaled_residual(&lhs, &rhs), tol);

    let sf = rep.structure_function();
    let ladder = (0..rep.label.level as usize)
        .map(|k| {
            let entry = rep.s_plus[(k + 1, k)];
            let phi = to_f64(&rep.phi[k + 1]);
            (entry * entry - phi).abs() / phi.max(1.0)
        })
        .fold(0.0, f64::max);
    report.push("ladder_squares", ladder, tol);

    exact_checks(&mut report, &sf, &cp, rep);
    Ok(report)
}

fn exact_checks(
    report: &mut VerificationReport,
    sf: &StructureFunction,
    cp: &CommutatorPolynomial,
    rep: &IrrepMatrices,
) {
    let level = rep.label.level;
    let phi: Vec<Rational> = sf.values();
    let boundary_ok = phi[0].is_zero() && phi[level as usize + 1].is_zero();
    let positive_ok = phi[1..=level as usize].iter().all(Signed::is_positive);
    report.push_exact(
        "phi_boundary_exact",
        boundary_ok && positive_ok,
        to_f64(&phi[0]).abs() + to_f64(&phi[level as usize + 1]).abs() + 1.0,
    );

    let energy = rep.energy.to_big();
    let u = rat(*rep.u.numer(), *rep.u.denom());
    let mut comm_err = Rational::zero();
    let mut prod_err = Rational::zero();
    for k in 0..=level {
        let s0 = int(k as i64) + &u;
        // diagonal of [S-, S+] = Phi(k+1) - Phi(k)
        let diff = &phi[k as usize + 1] - &phi[k as usize] - cp.eval(&energy, &s0);
        comm_err = comm_err.max(diff.abs());
        // S+ S- = F(H, S0) acts as Phi(k)
        let prod = &phi[k as usize] - cp.generating().eval(&energy, &s0);
        prod_err = prod_err.max(prod.abs());
    }
    report.push_exact("commutator_exact", comm_err.is_zero(), to_f64(&comm_err));
    report.push_exact("splus_sminus_exact", prod_err.is_zero(), to_f64(&prod_err));
}

/// Default `rho = sigma = 2/sqrt(3)`, so that `rho * sigma = 4/3`.
pub const W32_DEFAULT_RHO: f64 = 1.154_700_538_379_251_5;

pub fn w32_check(rep: &IrrepMatrices) -> Result<VerificationReport> {
    w32_check_with(rep, W32_DEFAULT_RHO, IDENTITY_TOL)
}

/// Relations of the finite W algebra `W_3^(2)` under
/// `F_W = sigma S_+`, `E_W = rho S_-`, `H_W = -2 S0 + H/3`, `C_W = -4/9 H^2 + 1/4`.
pub fn w32_check_with(rep: &IrrepMatrices, rho: f64, tol: f64) -> Result<VerificationReport> {
    if (rep.ratio.m(), rep.ratio.n()) != (1, 2) {
        return Err(Error::WrongRatio {
            expected: "1:2",
            m: rep.ratio.m(),
            n: rep.ratio.n(),
        });
    }
    let dim = check_shapes(rep)?;
    let sigma = 4.0 / (3.0 * rho);
    let ident = DMatrix::<f64>::identity(dim, dim);
    let e_w = &rep.s_minus * rho;
    let f_w = &rep.s_plus * sigma;
    let h_w = &rep.s0 * -2.0 + &rep.h / 3.0;
    let c_w = (&rep.h * &rep.h) * (-4.0 / 9.0) + &ident * 0.25;

    let mut report = VerificationReport::new();
    report.push("w32_h_e", scaled_residual(&commutator(&h_w, &e_w), &(&e_w * 2.0)), tol);
    report.push("w32_h_f", scaled_residual(&commutator(&h_w, &f_w), &(&f_w * -2.0)), tol);
    report.push(
        "w32_e_f",
        scaled_residual(&commutator(&e_w, &f_w), &(&h_w * &h_w + &c_w)),
        tol,
    );
    let zero = DMatrix::zeros(dim, dim);
    let central = [&e_w, &f_w, &h_w]
        .iter()
        .map(|x| scaled_residual(&commutator(&c_w, x), &zero))
        .fold(0.0, f64::max);
    report.push("w32_casimir_central", central, tol);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(m: u32, n: u32, level: u32, p: u32, q: u32) -> IrrepMatrices {
        build_irrep(&IrrepLabel::new(level, p, q), &FrequencyRatio::new(m, n).unwrap()).unwrap()
    }

    #[test]
    fn one_dimensional() {
        let rep = irrep(1, 1, 0, 1, 1);
        assert_eq!(rep.s_plus, DMatrix::from_element(1, 1, 0.0));
        assert_eq!(rep.s_minus, DMatrix::from_element(1, 1, 0.0));
        assert_eq!(rep.s0, DMatrix::from_element(1, 1, 0.0));
        assert_eq!(rep.h, DMatrix::from_element(1, 1, 1.0));
        let report = verify_algebra(&rep).unwrap();
        assert!(report.checks.iter().all(|c| c.residual == 0.0), "{report:?}");
    }

    #[test]
    fn s0_diagonal_one_to_two() {
        let rep = irrep(1, 2, 1, 1, 1);
        assert_eq!(rep.u, Rational64::new(-3, 8));
        assert_eq!(rep.s0_exact(), vec![Rational64::new(-3, 8), Rational64::new(5, 8)]);
        assert_eq!(rep.s0[(0, 0)], -0.375);
        assert_eq!(rep.s0[(1, 1)], 0.625);
    }

    #[test]
    fn hamiltonian_is_scalar() {
        let rep = irrep(1, 2, 2, 1, 2);
        assert_eq!(rep.energy.to_string(), "13/4");
        assert_eq!(rep.h, DMatrix::identity(3, 3) * 3.25);
    }

    #[test]
    fn identities_on_sweep() {
        for m in 1..=3u32 {
            for n in 1..=4u32 {
                let Ok(ratio) = FrequencyRatio::new(m, n) else { continue };
                for label in ratio.irreps(8) {
                    let rep = build_irrep(&label, &ratio).unwrap();
                    let report = verify_algebra(&rep).unwrap();
                    assert!(report.max_residual() <= 1e-12, "{ratio} {label}: {report:?}");
                }
            }
        }
    }

    #[test]
    fn fault_injection() {
        let mut rep = irrep(1, 2, 2, 1, 1);
        rep.s_plus[(1, 0)] += 1e-3;
        let report = verify_algebra(&rep).unwrap();
        assert!(report.residual("commutator").unwrap() >= 1e-4, "{report:?}");
        assert!(!report.passed());
    }

    #[test]
    fn shape_mismatch() {
        let mut rep = irrep(1, 2, 2, 1, 1);
        rep.s_plus = DMatrix::zeros(2, 3);
        assert!(matches!(verify_algebra(&rep), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn w32_relations() {
        for (level, q) in [(2, 1), (5, 2), (0, 1), (8, 2)] {
            let rep = irrep(1, 2, level, 1, q);
            let report = w32_check(&rep).unwrap();
            assert!(report.passed(), "{report:?}");
            assert!(report.max_residual() <= 1e-10);
            // gauge freedom: only rho * sigma is fixed
            assert!(w32_check_with(&rep, 0.5, 1e-10).unwrap().passed());
        }
        let wrong = irrep(1, 3, 1, 1, 1);
        assert!(matches!(w32_check(&wrong), Err(Error::WrongRatio { .. })));
    }

    #[test]
    fn w32_default_gauge() {
        assert!((W32_DEFAULT_RHO * W32_DEFAULT_RHO - 4.0 / 3.0).abs() < 1e-15);
    }
}
