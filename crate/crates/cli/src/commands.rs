use du2_core::algebra::{
    build_irrep, build_oracle, commutator_polynomial, oracle_compare, parafermionic_decompose, verify_algebra,
    w32_check, CartesianOracle, IrrepMatrices,
};
use du2_core::angular::{
    angular_eigenvalues, angular_eigenvector, eigenvalues_by_bisection, eigenvalues_dense, AngularEigenvector,
};
use du2_core::poly::to_f64;
use du2_core::{
    energy_of_cartesian, energy_of_irrep, enumerate_levels, irrep_members, FrequencyRatio, IrrepLabel, Result,
    VerificationReport, EIGENVECTOR_TOL, IDENTITY_TOL,
};
use serde_json::Value;

use crate::numeric::{decimal, exact, exact_hint, residual, sqrt_hint};
use crate::report::{Report, Section};

fn hint(x: f64) -> Value {
    exact_hint(x).map_or(Value::Null, Value::from)
}

/// Replaces every floating-point tolerance; exact checks keep tolerance 0.
fn override_tol(mut checks: VerificationReport, tol: Option<f64>) -> VerificationReport {
    if let Some(tol) = tol {
        for check in &mut checks.checks {
            if check.tolerance > 0.0 {
                check.tolerance = tol;
            }
        }
    }
    checks
}

pub fn spectrum(ratio: FrequencyRatio, count: usize, tol: Option<f64>) -> Report {
    let mut report = Report::new("spectrum", ratio);
    let mut section = Section::new(
        "levels",
        &[
            "index",
            "energy",
            "energy_decimal",
            "N",
            "p",
            "q",
            "degeneracy",
            "members",
        ],
    );
    let mut checks = VerificationReport::new();
    let mut consistent = true;
    for (i, level) in enumerate_levels(&ratio, count).iter().enumerate() {
        let members: Vec<String> = level.members.iter().map(ToString::to_string).collect();
        consistent &= level.degeneracy == level.label.dimension()
            && level
                .members
                .iter()
                .all(|s| energy_of_cartesian(s, &ratio) == level.energy);
        section.push(vec![
            Value::from(i + 1),
            Value::from(level.energy.to_string()),
            decimal(level.energy.to_f64()),
            Value::from(level.label.level),
            Value::from(level.label.p),
            Value::from(level.label.q),
            Value::from(level.degeneracy),
            Value::from(members.join(" ")),
        ]);
    }
    checks.push_exact("level_membership_exact", consistent, 1.0);
    report.sections.push(section);
    report.absorb(None, &override_tol(checks, tol));
    report
}

/// Algebra, oracle, W3(2) and parafermionic checks of one irrep.
fn irrep_checks(rep: &IrrepMatrices, oracle: &CartesianOracle) -> Result<VerificationReport> {
    let mut checks = verify_algebra(rep)?;
    checks.extend(oracle_compare(oracle, &rep.label)?);
    if (rep.ratio.m(), rep.ratio.n()) == (1, 2) {
        checks.extend(w32_check(rep)?);
    }
    if rep.ratio.m() == 1 {
        let divisible = parafermionic_decompose(&rep.structure_function());
        let positive = divisible.as_ref().is_ok_and(|d| d.is_positive());
        checks.push_exact("parafermionic_divisible", divisible.is_ok(), 1.0);
        checks.push_exact("parafermionic_positive", positive, 1.0);
    }
    Ok(checks)
}

pub fn irrep(ratio: FrequencyRatio, label: IrrepLabel, tol: Option<f64>) -> Result<Report> {
    let rep = build_irrep(&label, &ratio)?;
    let mut report = Report::new("irrep", ratio);

    let mut summary = Section::new(
        "irrep",
        &["N", "p", "q", "dimension", "energy", "energy_decimal", "u", "u_decimal"],
    );
    summary.push(vec![
        Value::from(label.level),
        Value::from(label.p),
        Value::from(label.q),
        Value::from(rep.dim()),
        Value::from(rep.energy.to_string()),
        decimal(rep.energy.to_f64()),
        Value::from(rep.u.to_string()),
        decimal(*rep.u.numer() as f64 / *rep.u.denom() as f64),
    ]);
    report.sections.push(summary);

    let mut states = Section::new("states", &["k", "state", "s0", "s0_decimal"]);
    for ((k, member), s0) in irrep_members(&label, &ratio)?.iter().enumerate().zip(rep.s0_exact()) {
        states.push(vec![
            Value::from(k),
            Value::from(member.to_string()),
            Value::from(s0.to_string()),
            decimal(*s0.numer() as f64 / *s0.denom() as f64),
        ]);
    }
    report.sections.push(states);

    let sf = rep.structure_function();
    let mut phi = Section::new("structure", &["x", "phi", "phi_decimal", "factorial"]);
    for (x, value) in rep.phi.iter().enumerate() {
        let factorial = if x <= label.level as usize {
            exact(&sf.factorial(x as u32))
        } else {
            Value::Null
        };
        phi.push(vec![Value::from(x), exact(value), decimal(to_f64(value)), factorial]);
    }
    report.sections.push(phi);

    let mut ladder = Section::new("ladder", &["operator", "row", "col", "value", "exact_hint"]);
    for (name, transpose) in [("S+", false), ("S-", true)] {
        for k in 1..rep.dim() {
            let (row, col) = if transpose { (k - 1, k) } else { (k, k - 1) };
            let value = if transpose {
                rep.s_minus[(row, col)]
            } else {
                rep.s_plus[(row, col)]
            };
            ladder.push(vec![
                Value::from(name),
                Value::from(row),
                Value::from(col),
                decimal(value),
                Value::from(sqrt_hint(&rep.phi[k])),
            ]);
        }
    }
    report.sections.push(ladder);

    let oracle = build_oracle(&ratio, label.level);
    report.absorb(Some(label), &override_tol(irrep_checks(&rep, &oracle)?, tol));
    Ok(report)
}

/// Method agreement, negation symmetry and eigenvector residuals on one irrep.
fn angular_checks(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<(VerificationReport, Vec<AngularEigenvector>)> {
    let mut checks = VerificationReport::new();
    let spectrum = match angular_eigenvalues(label, ratio) {
        Ok(s) => s,
        Err(du2_core::Error::DegenerateSpectrum { .. }) => {
            checks.push("angular_nondegenerate", f64::INFINITY, 0.0);
            return Ok((checks, Vec::new()));
        }
        Err(e) => return Err(e),
    };
    let bisection = eigenvalues_by_bisection(label, ratio)?;
    let dense = eigenvalues_dense(label, ratio)?;
    let agreement = spectrum
        .eigenvalues
        .iter()
        .zip(&bisection)
        .zip(&dense)
        .map(|((a, b), c)| (a - b).abs().max((a - c).abs()))
        .fold(0.0, f64::max);
    checks.push("method_agreement", agreement, EIGENVECTOR_TOL);
    checks.push("spectrum_symmetry", spectrum.symmetry_defect(), IDENTITY_TOL);

    let mut vectors = Vec::new();
    let mut worst: f64 = 0.0;
    for &ell in &spectrum.eigenvalues {
        match angular_eigenvector(label, ratio, ell) {
            Ok(v) => {
                worst = worst.max(v.residual);
                vectors.push(v);
            }
            Err(du2_core::Error::NotAnEigenvalue { residual, .. }) => worst = worst.max(residual),
            Err(e) => return Err(e),
        }
    }
    checks.push("eigenvector_residual", worst, EIGENVECTOR_TOL);
    Ok((checks, vectors))
}

fn phase_text(k: usize) -> &'static str {
    ["1", "i", "-1", "-i"][k % 4]
}

pub fn angular(ratio: FrequencyRatio, label: IrrepLabel, tol: Option<f64>) -> Result<Report> {
    ratio.check(&label)?;
    let mut report = Report::new("angular", ratio);
    let (checks, vectors) = angular_checks(&label, &ratio)?;
    let level = label.level as i64;

    let mut eigen = Section::new("eigenvalues", &["m", "ell", "exact_hint", "residual"]);
    let mut amps = Section::new(
        "amplitudes",
        &[
            "m",
            "ell",
            "k",
            "state",
            "c_k",
            "phase",
            "weight",
            "weight_hint",
            "re",
            "im",
        ],
    );
    for (i, v) in vectors.iter().enumerate() {
        let m = -level + 2 * i as i64;
        eigen.push(vec![Value::from(m), decimal(v.ell), hint(v.ell), residual(v.residual)]);
        for (k, ((state, amp), c)) in v.cartesian.iter().zip(&v.coefficients).enumerate() {
            // amplitude = i^k * weight with weight real
            let weight = match k % 4 {
                0 => amp.re,
                1 => amp.im,
                2 => -amp.re,
                _ => -amp.im,
            };
            amps.push(vec![
                Value::from(m),
                decimal(v.ell),
                Value::from(k),
                Value::from(state.to_string()),
                decimal(*c),
                Value::from(phase_text(k)),
                decimal(weight),
                hint(weight),
                decimal(amp.re),
                decimal(amp.im),
            ]);
        }
    }
    report.sections.push(eigen);
    report.sections.push(amps);
    report.absorb(Some(label), &override_tol(checks, tol));
    Ok(report)
}

pub fn verify(ratio: FrequencyRatio, n_max: u32, tol: Option<f64>) -> Result<Report> {
    let mut report = Report::new("verify", ratio);
    let poly = commutator_polynomial(&ratio);

    let mut commutator = Section::new("commutator", &["polynomial", "degree_s0"]);
    commutator.push(vec![Value::from(poly.to_string()), Value::from(poly.degree_s0())]);
    report.sections.push(commutator);

    let is_w32 = (ratio.m(), ratio.n()) == (1, 2);
    let oracle = build_oracle(&ratio, n_max);
    let mut irreps = Section::new(
        "irreps",
        &[
            "N",
            "p",
            "q",
            "energy",
            "dimension",
            "checks",
            "worst",
            "passed",
            "failures",
        ],
    );
    let w32_names = ["w32_h_e", "w32_h_f", "w32_e_f", "w32_casimir_central"];
    let mut w32 = Section::new("w32", &["N", "p", "q", "h_e", "h_f", "e_f", "casimir_central"]);

    for label in ratio.irreps(n_max) {
        let rep = build_irrep(&label, &ratio)?;
        let mut checks = irrep_checks(&rep, &oracle)?;
        checks.extend(angular_checks(&label, &ratio)?.0);
        let checks = override_tol(checks, tol);

        let failures: Vec<&str> = checks.failures().map(|c| c.name.as_str()).collect();
        irreps.push(vec![
            Value::from(label.level),
            Value::from(label.p),
            Value::from(label.q),
            Value::from(energy_of_irrep(&label, &ratio)?.to_string()),
            Value::from(label.dimension()),
            Value::from(checks.checks.len()),
            residual(checks.max_residual()),
            Value::from(checks.passed()),
            Value::from(failures.join(" ")),
        ]);
        if is_w32 {
            let mut row = vec![Value::from(label.level), Value::from(label.p), Value::from(label.q)];
            row.extend(
                w32_names
                    .iter()
                    .map(|n| residual(checks.residual(n).unwrap_or(f64::NAN))),
            );
            w32.push(row);
        }
        report.absorb(Some(label), &checks);
    }

    report.sections.push(irreps);
    if is_w32 {
        report.sections.push(w32);
    }
    Ok(report)
}
