//! Independent realization of the generators on a truncated Cartesian Fock
//! space, built only from the ladder operators `a, a^+, b, b^+`.
//!
//! The matrices are assembled on a box padded by `m` quanta in `x` and `n` in
//! `y`, then restricted to `n_x < X, n_y < Y`. Products such as `(a^+)^m`
//! and `{a, a^+}` are therefore exact on every retained state.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use super::irrep::build_irrep;
use crate::error::{Error, Result};
use crate::oscillator::{irrep_members, CartesianState, FrequencyRatio, IrrepLabel};
use crate::verify::{scaled_residual, VerificationReport, IDENTITY_TOL};

/// Row-major sparse matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, f64>>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        SparseMatrix {
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut out = SparseMatrix::zeros(dim);
        for i in 0..dim {
            out.set(i, i, 1.0);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        if value == 0.0 {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row].get(&col).copied().unwrap_or(0.0)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    /// Non-zero entries `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(&j, &v)| (i, j, v)))
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, f64> = BTreeMap::new();
            for (&j, &a) in row {
                for (&k, &b) in &rhs.rows[j] {
                    *acc.entry(k).or_insert(0.0) += a * b;
                }
            }
            acc.retain(|_, v| *v != 0.0);
            out.rows[i] = acc;
        }
        out
    }

    pub fn pow(&self, exp: u32) -> SparseMatrix {
        (0..exp).fold(SparseMatrix::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn lin_comb(&self, alpha: f64, rhs: &SparseMatrix, beta: f64) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim);
        for (i, j, v) in self.entries() {
            out.set(i, j, alpha * v);
        }
        for (i, j, v) in rhs.entries() {
            let sum = out.get(i, j) + beta * v;
            out.set(i, j, sum);
        }
        out
    }

    /// Keeps rows and columns listed in `keep` (old indices, in new order).
    fn restrict(&self, keep: &[usize]) -> SparseMatrix {
        let new_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let mut out = SparseMatrix::zeros(keep.len());
        for (new_row, &old_row) in keep.iter().enumerate() {
            for (&old_col, &v) in &self.rows[old_row] {
                if let Some(&new_col) = new_index.get(&old_col) {
                    out.set(new_row, new_col, v);
                }
            }
        }
        out
    }
}

/// Generators on `{|n_x, n_y> : n_x < X, n_y < Y}`, indexed `n_x * Y + n_y`.
#[derive(Debug, Clone)]
pub struct CartesianOracle {
    pub ratio: FrequencyRatio,
    pub x_max: usize,
    pub y_max: usize,
    pub a: SparseMatrix,
    pub a_dag: SparseMatrix,
    pub b: SparseMatrix,
    pub b_dag: SparseMatrix,
    pub u: SparseMatrix,
    pub w: SparseMatrix,
    pub s0: SparseMatrix,
    pub s_plus: SparseMatrix,
    pub s_minus: SparseMatrix,
    pub h: SparseMatrix,
}

impl CartesianOracle {
    pub fn dim(&self) -> usize {
        self.x_max * self.y_max
    }

    pub fn index(&self, state: &CartesianState) -> Option<usize> {
        let (nx, ny) = (state.nx as usize, state.ny as usize);
        (nx < self.x_max && ny < self.y_max).then_some(nx * self.y_max + ny)
    }

    pub fn state(&self, index: usize) -> CartesianState {
        CartesianState::new((index / self.y_max) as u32, (index % self.y_max) as u32)
    }
}

/// Oracle whose box holds every irrep with `N <= max_level` together with its
/// `S_+` and `S_-` images: `X = m (N_max + 2)`, `Y = n (N_max + 2)`.
pub fn build_oracle(ratio: &FrequencyRatio, max_level: u32) -> CartesianOracle {
    let (m, n) = (ratio.m() as usize, ratio.n() as usize);
    let x_max = m * (max_level as usize + 2);
    let y_max = n * (max_level as usize + 2);
    let (xe, ye) = (x_max + m, y_max + n);
    let dim = xe * ye;
    let idx = |nx: usize, ny: usize| nx * ye + ny;

    let mut a = SparseMatrix::zeros(dim);
    let mut a_dag = SparseMatrix::zeros(dim);
    let mut b = SparseMatrix::zeros(dim);
    let mut b_dag = SparseMatrix::zeros(dim);
    for nx in 0..xe {
        for ny in 0..ye {
            let col = idx(nx, ny);
            // [a, a^+] = 1/m, [b, b^+] = 1/n
            if nx > 0 {
                a.set(idx(nx - 1, ny), col, (nx as f64 / m as f64).sqrt());
            }
            if nx + 1 < xe {
                a_dag.set(idx(nx + 1, ny), col, ((nx + 1) as f64 / m as f64).sqrt());
            }
            if ny > 0 {
                b.set(idx(nx, ny - 1), col, (ny as f64 / n as f64).sqrt());
            }
            if ny + 1 < ye {
                b_dag.set(idx(nx, ny + 1), col, ((ny + 1) as f64 / n as f64).sqrt());
            }
        }
    }

    let u = a.mul(&a_dag).lin_comb(0.5, &a_dag.mul(&a), 0.5);
    let w = b.mul(&b_dag).lin_comb(0.5, &b_dag.mul(&b), 0.5);
    let s_plus = a_dag.pow(m as u32).mul(&b.pow(n as u32));
    let s_minus = a.pow(m as u32).mul(&b_dag.pow(n as u32));
    let s0 = u.lin_comb(0.5, &w, -0.5);
    let h = u.lin_comb(1.0, &w, 1.0);

    let keep: Vec<usize> = (0..x_max)
        .flat_map(|nx| (0..y_max).map(move |ny| idx(nx, ny)))
        .collect();
    let r = |mat: &SparseMatrix| mat.restrict(&keep);
    CartesianOracle {
        ratio: *ratio,
        x_max,
        y_max,
        a: r(&a),
        a_dag: r(&a_dag),
        b: r(&b),
        b_dag: r(&b_dag),
        u: r(&u),
        w: r(&w),
        s0: r(&s0),
        s_plus: r(&s_plus),
        s_minus: r(&s_minus),
        h: r(&h),
    }
}

/// Compares the oracle, restricted to the members of `label` ordered by `k`,
/// against [`build_irrep`]. Also checks that `S_+` and `S_-` do not leak out
/// of the level.
pub fn oracle_compare(oracle: &CartesianOracle, label: &IrrepLabel) -> Result<VerificationReport> {
    let ratio = oracle.ratio;
    let members = irrep_members(label, &ratio)?;
    let (m, n) = (ratio.m() as usize, ratio.n() as usize);
    let fits = members
        .iter()
        .all(|s| s.nx as usize + m < oracle.x_max && s.ny as usize + n < oracle.y_max);
    if !fits {
        return Err(Error::TruncationTooSmall {
            level: label.level,
            x_max: oracle.x_max,
            y_max: oracle.y_max,
        });
    }
    let indices: Vec<usize> = members.iter().map(|s| oracle.index(s).expect("inside box")).collect();
    let dim = indices.len();
    let block = |mat: &SparseMatrix| DMatrix::from_fn(dim, dim, |i, j| mat.get(indices[i], indices[j]));

    let rep = build_irrep(label, &ratio)?;
    let mut report = VerificationReport::new();
    report.push("oracle_s0", scaled_residual(&block(&oracle.s0), &rep.s0), IDENTITY_TOL);
    report.push(
        "oracle_splus",
        scaled_residual(&block(&oracle.s_plus), &rep.s_plus),
        IDENTITY_TOL,
    );
    report.push(
        "oracle_sminus",
        scaled_residual(&block(&oracle.s_minus), &rep.s_minus),
        IDENTITY_TOL,
    );
    report.push("oracle_h", scaled_residual(&block(&oracle.h), &rep.h), IDENTITY_TOL);

    let mut leak: f64 = 0.0;
    for op in [&oracle.s0, &oracle.s_plus, &oracle.s_minus, &oracle.h] {
        for (row, col, v) in op.entries() {
            if indices.contains(&col) && !indices.contains(&row) {
                leak = leak.max(v.abs());
            }
        }
    }
    report.push("oracle_closure", leak, IDENTITY_TOL);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(m: u32, n: u32) -> FrequencyRatio {
        FrequencyRatio::new(m, n).unwrap()
    }

    #[test]
    fn isotropic_hamiltonian_diagonal() {
        let o = build_oracle(&ratio(1, 1), 2);
        assert_eq!((o.x_max, o.y_max), (4, 4));
        for i in 0..o.dim() {
            let s = o.state(i);
            assert!((o.h.get(i, i) - (s.nx + s.ny + 1) as f64).abs() < 1e-14);
        }
        assert_eq!(o.h.nnz(), o.dim());
    }

    #[test]
    fn level_multiplicity_one_to_two() {
        let o = build_oracle(&ratio(1, 2), 2);
        let count = (0..o.dim()).filter(|&i| (o.h.get(i, i) - 2.75).abs() < 1e-12).count();
        assert_eq!(count, 3);
    }

    #[test]
    fn ladder_product_two_to_three() {
        let o = build_oracle(&ratio(2, 3), 1);
        let from = o.index(&CartesianState::new(0, 3)).unwrap();
        let to = o.index(&CartesianState::new(2, 0)).unwrap();
        // sqrt((1*2/2^2) * (3*2*1/3^3)) = 1/3
        assert!((o.s_plus.get(to, from) - 1.0 / 3.0).abs() < 1e-14);
        let column: Vec<_> = o.s_plus.entries().filter(|&(_, c, _)| c == from).collect();
        assert_eq!(column.len(), 1);
    }

    #[test]
    fn ladder_commutators() {
        let o = build_oracle(&ratio(2, 3), 1);
        let inner = o.index(&CartesianState::new(1, 2)).unwrap();
        let ca = o.a.mul(&o.a_dag).lin_comb(1.0, &o.a_dag.mul(&o.a), -1.0);
        let cb = o.b.mul(&o.b_dag).lin_comb(1.0, &o.b_dag.mul(&o.b), -1.0);
        assert!((ca.get(inner, inner) - 0.5).abs() < 1e-14);
        assert!((cb.get(inner, inner) - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn compare_one_to_two_top_level() {
        let o = build_oracle(&ratio(1, 2), 2);
        let label = IrrepLabel::new(2, 1, 2);
        let members = irrep_members(&label, &o.ratio).unwrap();
        assert_eq!(
            members,
            [
                CartesianState::new(0, 5),
                CartesianState::new(1, 3),
                CartesianState::new(2, 1)
            ]
        );
        let report = oracle_compare(&o, &label).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn compare_isotropic_doublet() {
        let o = build_oracle(&ratio(1, 1), 1);
        let label = IrrepLabel::new(1, 1, 1);
        assert!(oracle_compare(&o, &label).unwrap().passed());
        let rep = build_irrep(&label, &o.ratio).unwrap();
        assert!((rep.s_plus[(1, 0)] - 1.0).abs() < 1e-15);
        let k0 = o.index(&CartesianState::new(0, 1)).unwrap();
        let k1 = o.index(&CartesianState::new(1, 0)).unwrap();
        assert!((o.s_plus.get(k1, k0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn compare_two_to_three() {
        let o = build_oracle(&ratio(2, 3), 2);
        let report = oracle_compare(&o, &IrrepLabel::new(2, 2, 1)).unwrap();
        assert!(report.max_residual() <= 1e-10, "{report:?}");
    }

    #[test]
    fn truncation_guard() {
        let o = build_oracle(&ratio(1, 2), 1);
        assert!(matches!(
            oracle_compare(&o, &IrrepLabel::new(2, 1, 1)),
            Err(Error::TruncationTooSmall { .. })
        ));
    }
}
