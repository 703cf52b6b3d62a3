use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a real symmetric tridiagonal matrix, ascending.
///
/// Implicit QL with Wilkinson shifts. `off[i]` couples rows `i` and `i + 1`.
pub fn symmetric_tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n.max(1), "off-diagonal length must be n - 1");
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NoConvergence);
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(symmetric_tridiagonal_eigenvalues(&[3.0], &[]).unwrap(), vec![3.0]);
        let ev = symmetric_tridiagonal_eigenvalues(&[0.0, 0.0], &[1.0]).unwrap();
        assert_abs_diff_eq!(ev[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-15);
        // su(2) ladder for N = 2: off-diagonals sqrt(2), sqrt(2)
        let ev = symmetric_tridiagonal_eigenvalues(&[0.0; 3], &[2f64.sqrt(); 2]).unwrap();
        for (got, want) in ev.iter().zip([-2.0, 0.0, 2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn decoupled_blocks() {
        let ev = symmetric_tridiagonal_eigenvalues(&[1.0, 2.0, 5.0], &[0.0, 0.0]).unwrap();
        assert_eq!(ev, vec![1.0, 2.0, 5.0]);
    }

    proptest! {
        #[test]
        fn matches_dense_solver(
            diag in prop::collection::vec(-10.0..10.0f64, 1..12),
            seed in prop::collection::vec(-5.0..5.0f64, 11),
        ) {
            let n = diag.len();
            let off = &seed[..n - 1];
            let ev = symmetric_tridiagonal_eigenvalues(&diag, off).unwrap();
            let dense = DMatrix::from_fn(n, n, |i, j| {
                if i == j { diag[i] } else if i + 1 == j { off[i] } else if j + 1 == i { off[j] } else { 0.0 }
            });
            let mut reference: Vec<f64> = dense.symmetric_eigenvalues().iter().copied().collect();
            reference.sort_by(f64::total_cmp);
            for (a, b) in ev.iter().zip(&reference) {
                prop_assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()), "{ev:?} vs {reference:?}");
            }
        }
    }
}
