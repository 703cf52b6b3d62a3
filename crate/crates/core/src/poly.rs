//! Exact-rational polynomials.
//!
//! [`Poly`] is a dense univariate polynomial, [`BiPoly`] a sparse polynomial
//! in the two commuting generators `H` and `S0`. Both are only as general as
//! the algebra in this crate needs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `num / den` as a big rational.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Dense univariate polynomial, coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `slope * x + offset`.
    pub fn linear(slope: Rational, offset: Rational) -> Self {
        Poly::new(vec![offset, slope])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Some((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * d;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Some((Poly::new(quot), Poly::new(rem)))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(power, c)| (c.clone(), monomial(&[(var, power as u32)])))
            .collect();
        join_terms(&terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Sparse polynomial in `H` and `S0`, keyed by `(power of H, power of S0)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::zero().with_term(0, 0, c)
    }

    /// `h_coeff * H + s_coeff * S0 + offset`.
    pub fn linear(h_coeff: Rational, s_coeff: Rational, offset: Rational) -> Self {
        BiPoly::zero()
            .with_term(1, 0, h_coeff)
            .with_term(0, 1, s_coeff)
            .with_term(0, 0, offset)
    }

    fn with_term(mut self, h: u32, s: u32, c: Rational) -> Self {
        self.add_term(h, s, c);
        self
    }

    fn add_term(&mut self, h: u32, s: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((h, s)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(h, s));
        }
    }

    /// Coefficient of `H^h S0^s`.
    pub fn coeff(&self, h: u32, s: u32) -> Rational {
        self.terms.get(&(h, s)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(h, s), c)| (h, s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_s0(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, s)| s).max()
    }

    pub fn degree_h(&self) -> Option<u32> {
        self.terms.keys().map(|&(h, _)| h).max()
    }

    /// Substitutes `S0 -> S0 + shift`.
    pub fn shift_s0(&self, shift: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(h, s), c) in &self.terms {
            // (S0 + t)^s = sum_j C(s, j) t^(s-j) S0^j
            let mut binom = BigInt::one();
            for j in 0..=s {
                let weight = Rational::from_integer(binom.clone()) * pow(shift, s - j);
                out.add_term(h, j, c * weight);
                binom = binom * BigInt::from(s - j) / BigInt::from(j + 1);
            }
        }
        out
    }

    pub fn eval(&self, h: &Rational, s0: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(hp, sp), c)| c * pow(h, hp) * pow(s0, sp))
            .sum()
    }

    pub fn eval_f64(&self, h: f64, s0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(hp, sp), c)| to_f64(c) * h.powi(hp as i32) * s0.powi(sp as i32))
            .sum()
    }
}

fn pow(base: &Rational, exp: u32) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(h, s), c) in &rhs.terms {
            out.add_term(h, s, c.clone());
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(h1, s1), a) in &self.terms {
            for (&(h2, s2), b) in &rhs.terms {
                out.add_term(h1 + h2, s1 + s2, a * b);
            }
        }
        out
    }
}

/// Terms ordered by descending power of `S0`, then descending power of `H`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        let terms: Vec<(Rational, String)> = keys
            .into_iter()
            .map(|(h, s)| (self.terms[&(h, s)].clone(), monomial(&[("H", h), ("S0", s)])))
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

fn monomial(factors: &[(&str, u32)]) -> String {
    factors
        .iter()
        .filter(|(_, p)| *p > 0)
        .map(|(v, p)| if *p == 1 { v.to_string() } else { format!("{v}^{p}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn join_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        if mono.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{magnitude}*{mono}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_exact_and_with_remainder() {
        // (x^2 - 1) / (x - 1) = x + 1
        let p = Poly::new(vec![int(-1), int(0), int(1)]);
        let d = Poly::linear(int(1), int(-1));
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, Poly::linear(int(1), int(1)));
        assert!(r.is_zero());

        // (x^2 + 1) / x leaves remainder 1
        let p = Poly::new(vec![int(1), int(0), int(1)]);
        let (q, r) = p.div_rem(&Poly::x()).unwrap();
        assert_eq!(q, Poly::x());
        assert_eq!(r, Poly::one());
        assert!(p.div_rem(&Poly::zero()).is_none());
    }

    #[test]
    fn shift_matches_direct_evaluation() {
        let p = &(&BiPoly::linear(rat(1, 2), int(1), rat(-1, 3)) * &BiPoly::linear(int(2), int(-3), int(1)))
            * &BiPoly::linear(int(0), int(1), int(5));
        let shifted = p.shift_s0(&int(1));
        for h in -2..3 {
            for s in -3..4 {
                let (h, s) = (int(h), int(s));
                assert_eq!(shifted.eval(&h, &s), p.eval(&h, &(&s + int(1))));
            }
        }
    }

    #[test]
    fn display() {
        let p = BiPoly::linear(rat(-1, 4), int(3), rat(3, 16));
        assert_eq!(p.to_string(), "3*S0 - 1/4*H + 3/16");
        assert_eq!(BiPoly::linear(int(0), int(-2), int(0)).to_string(), "-2*S0");
        assert_eq!(Poly::linear(int(-1), rat(9, 2)).to_string(), "-x + 9/2");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }
}
