//! Structure function of the deformed oscillator carried by one irrep.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::oscillator::{FrequencyRatio, IrrepLabel};
use crate::poly::{int, rat, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    /// Product of `m + n` linear factors.
    #[default]
    Product,
    /// Ratio of Gamma functions, expanded as rising factorials.
    Gamma,
}

/// `Phi^N_(p,q)(x)` for a fixed irrep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFunction {
    label: IrrepLabel,
    ratio: FrequencyRatio,
    form: Form,
}

pub fn structure_function(label: &IrrepLabel, ratio: &FrequencyRatio, form: Form) -> Result<StructureFunction> {
    ratio.check(label)?;
    Ok(StructureFunction {
        label: *label,
        ratio: *ratio,
        form,
    })
}

impl StructureFunction {
    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn ratio(&self) -> &FrequencyRatio {
        &self.ratio
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn with_form(&self, form: Form) -> StructureFunction {
        StructureFunction { form, ..self.clone() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        match self.form {
            Form::Product => self.eval_product(x),
            Form::Gamma => self.eval_gamma(x),
        }
    }

    pub fn at(&self, k: u32) -> Rational {
        self.eval(&int(k as i64))
    }

    /// `Phi(0), Phi(1), ..., Phi(N + 1)`.
    pub fn values(&self) -> Vec<Rational> {
        (0..=self.label.level + 1).map(|k| self.at(k)).collect()
    }

    /// Deformed factorial `[k]! = Phi(k) [k-1]!`, `[0]! = 1`.
    pub fn factorial(&self, k: u32) -> Rational {
        (1..=k).fold(Rational::one(), |acc, j| acc * self.at(j))
    }

    /// Linear factors `x + (p - j)/m` for `j = 1..=m` and
    /// `N - x + (q + l - 1)/n` for `l = 1..=n`.
    fn factors(&self) -> impl Iterator<Item = Poly> + '_ {
        let (m, n) = (self.ratio.m() as i64, self.ratio.n() as i64);
        let (p, q, level) = (self.label.p as i64, self.label.q as i64, self.label.level as i64);
        let x_side = (1..=m).map(move |j| Poly::linear(int(1), rat(p - j, m)));
        let y_side = (1..=n).map(move |l| Poly::linear(int(-1), int(level) + rat(q + l - 1, n)));
        x_side.chain(y_side)
    }

    fn eval_product(&self, x: &Rational) -> Rational {
        self.factors().map(|f| f.eval(x)).product()
    }

    fn eval_gamma(&self, x: &Rational) -> Rational {
        let (m, n) = (self.ratio.m() as i64, self.ratio.n() as i64);
        let (p, q, level) = (self.label.p as i64, self.label.q as i64, self.label.level as i64);
        // Gamma(a + j) / Gamma(a) = a (a + 1) ... (a + j - 1)
        let rising = |a: Rational, j: i64| -> Rational { (0..j).map(|i| &a + int(i)).product() };
        let x_part = rising(int(m) * x + int(p - m), m);
        let y_part = rising((int(level) - x) * int(n) + int(q), n);
        let norm = int(m).pow(m as i32) * int(n).pow(n as i32);
        x_part * y_part / norm
    }

    /// Expanded polynomial in `x`.
    pub fn polynomial(&self) -> Poly {
        self.factors().fold(Poly::one(), |acc, f| &acc * &f)
    }
}

/// `Phi(x) = x (N + 1 - x) P(x)` together with `P(1..=N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parafermionic {
    pub quotient: Poly,
    pub values: Vec<Rational>,
}

impl Parafermionic {
    pub fn is_positive(&self) -> bool {
        self.values.iter().all(Signed::is_positive)
    }
}

/// Factors out `x (N + 1 - x)`. Only defined for ratios `1:n`.
pub fn parafermionic_decompose(sf: &StructureFunction) -> Result<Parafermionic> {
    let ratio = sf.ratio();
    if ratio.m() != 1 {
        return Err(Error::WrongRatio {
            expected: "1:n",
            m: ratio.m(),
            n: ratio.n(),
        });
    }
    let level = sf.label().level as i64;
    let boundary = &Poly::x() * &Poly::linear(int(-1), int(level + 1));
    let (quotient, remainder) = sf.polynomial().div_rem(&boundary).ok_or(Error::NotDivisible)?;
    if !remainder.is_zero() {
        return Err(Error::NotDivisible);
    }
    let values = (1..=level).map(|k| quotient.eval(&int(k))).collect();
    Ok(Parafermionic { quotient, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn sf(m: u32, n: u32, level: u32, p: u32, q: u32) -> StructureFunction {
        let ratio = FrequencyRatio::new(m, n).unwrap();
        structure_function(&IrrepLabel::new(level, p, q), &ratio, Form::Product).unwrap()
    }

    /// Factored reference `x (N + 1 - x) * prod (N + shift - x)`.
    fn reference(level: i64, shifts: &[Rational], x: i64) -> Rational {
        let (x, nn) = (int(x), int(level));
        shifts
            .iter()
            .fold(&x * (&nn + int(1) - &x), |acc, s| acc * (&nn + s - &x))
    }

    #[test]
    fn printed_special_cases() {
        // (m, n, q, extra shifts beyond x(N+1-x))
        let cases: Vec<(u32, u32, u32, Vec<Rational>)> = vec![
            (1, 1, 1, vec![]),
            (1, 2, 2, vec![rat(3, 2)]),
            (1, 2, 1, vec![rat(1, 2)]),
            (1, 3, 1, vec![rat(1, 3), rat(2, 3)]),
            (1, 3, 2, vec![rat(2, 3), rat(4, 3)]),
            (1, 3, 3, vec![rat(4, 3), rat(5, 3)]),
        ];
        for (m, n, q, shifts) in cases {
            for level in 0..=8 {
                let f = sf(m, n, level, 1, q);
                for x in 0..=level as i64 + 1 {
                    assert_eq!(
                        f.at(x as u32),
                        reference(level as i64, &shifts, x),
                        "{m}:{n} q={q} N={level} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn forms_agree_and_boundaries_hold() {
        for m in 1..=5u32 {
            for n in 1..=5u32 {
                let Ok(ratio) = FrequencyRatio::new(m, n) else { continue };
                for label in ratio.irreps(10) {
                    let prod = structure_function(&label, &ratio, Form::Product).unwrap();
                    let gamma = prod.with_form(Form::Gamma);
                    let values = prod.values();
                    assert_eq!(values, gamma.values(), "{ratio} {label}");
                    assert!(values[0].is_zero());
                    assert!(values[label.level as usize + 1].is_zero());
                    assert!(values[1..=label.level as usize].iter().all(Signed::is_positive));
                }
            }
        }
    }

    #[test]
    fn forms_agree_off_integers() {
        let f = sf(2, 3, 4, 2, 1);
        for x in [rat(1, 7), rat(-5, 3), rat(9, 2)] {
            assert_eq!(f.eval(&x), f.with_form(Form::Gamma).eval(&x));
            assert_eq!(f.eval(&x), f.polynomial().eval(&x));
        }
    }

    #[test]
    fn factorial_recurrence() {
        let f = sf(1, 2, 2, 1, 2);
        assert_eq!(f.factorial(0), int(1));
        assert_eq!(f.factorial(1), int(5));
        assert_eq!(f.factorial(2), int(15));
    }

    #[test]
    fn parafermionic_examples() {
        let d = parafermionic_decompose(&sf(1, 2, 3, 1, 2)).unwrap();
        assert_eq!(d.quotient, Poly::linear(int(-1), rat(9, 2)));
        assert!(d.is_positive());

        for level in 0..6 {
            let d = parafermionic_decompose(&sf(1, 1, level, 1, 1)).unwrap();
            assert_eq!(d.quotient, Poly::one());
        }

        let d = parafermionic_decompose(&sf(1, 3, 2, 1, 2)).unwrap();
        let expected = &Poly::linear(int(-1), rat(8, 3)) * &Poly::linear(int(-1), rat(10, 3));
        assert_eq!(d.quotient, expected);
        assert_eq!(d.values.len(), 2);
        assert!(d.is_positive());
    }

    #[test]
    fn parafermionic_guard() {
        assert!(matches!(
            parafermionic_decompose(&sf(2, 3, 2, 1, 1)),
            Err(Error::WrongRatio { .. })
        ));
    }
}
