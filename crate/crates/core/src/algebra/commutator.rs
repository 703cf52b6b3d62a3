//! `[S_-, S_+] = F(H, S0 + 1) - F(H, S0)` as an exact polynomial.

use crate::oscillator::FrequencyRatio;
use crate::poly::{int, rat, BiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorPolynomial {
    ratio: FrequencyRatio,
    generating: BiPoly,
    commutator: BiPoly,
}

impl CommutatorPolynomial {
    pub fn ratio(&self) -> &FrequencyRatio {
        &self.ratio
    }

    /// `F(H, S0) = prod_k (H/2 + S0 - (2k-1)/(2m)) prod_l (H/2 - S0 + (2l-1)/(2n))`,
    /// which equals `S_+ S_-`.
    pub fn generating(&self) -> &BiPoly {
        &self.generating
    }

    pub fn polynomial(&self) -> &BiPoly {
        &self.commutator
    }

    pub fn coeff(&self, h_power: u32, s0_power: u32) -> Rational {
        self.commutator.coeff(h_power, s0_power)
    }

    pub fn degree_s0(&self) -> u32 {
        self.commutator.degree_s0().unwrap_or(0)
    }

    pub fn eval(&self, h: &Rational, s0: &Rational) -> Rational {
        self.commutator.eval(h, s0)
    }
}

impl std::fmt::Display for CommutatorPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.commutator.fmt(f)
    }
}

pub fn commutator_polynomial(ratio: &FrequencyRatio) -> CommutatorPolynomial {
    let (m, n) = (ratio.m() as i64, ratio.n() as i64);
    let half = rat(1, 2);
    let mut generating = BiPoly::constant(int(1));
    for k in 1..=m {
        generating = &generating * &BiPoly::linear(half.clone(), int(1), rat(-(2 * k - 1), 2 * m));
    }
    for l in 1..=n {
        generating = &generating * &BiPoly::linear(half.clone(), int(-1), rat(2 * l - 1, 2 * n));
    }
    let commutator = &generating.shift_s0(&int(1)) - &generating;
    CommutatorPolynomial {
        ratio: *ratio,
        generating,
        commutator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(m: u32, n: u32) -> CommutatorPolynomial {
        commutator_polynomial(&FrequencyRatio::new(m, n).unwrap())
    }

    #[test]
    fn isotropic() {
        let c = poly(1, 1);
        let expected = BiPoly::linear(int(0), int(-2), int(0));
        assert_eq!(c.polynomial(), &expected);
        assert_eq!(c.to_string(), "-2*S0");
    }

    #[test]
    fn one_to_two() {
        let c = poly(1, 2);
        let nonzero: Vec<_> = c.polynomial().terms().map(|(h, s, v)| (h, s, v.clone())).collect();
        assert_eq!(
            nonzero,
            vec![(0, 0, rat(3, 16)), (0, 2, int(3)), (1, 1, int(-1)), (2, 0, rat(-1, 4))]
        );
        assert_eq!(c.to_string(), "3*S0^2 - H*S0 - 1/4*H^2 + 3/16");
    }

    #[test]
    fn one_to_three() {
        let c = poly(1, 3);
        assert_eq!(c.coeff(0, 3), int(-4));
        assert_eq!(c.coeff(1, 2), int(3));
        assert_eq!(c.coeff(0, 1), rat(-7, 9));
        assert_eq!(c.coeff(3, 0), rat(-1, 4));
        assert_eq!(c.coeff(1, 0), rat(1, 4));
        assert_eq!(c.polynomial().terms().count(), 5);
    }

    #[test]
    fn degree_in_s0() {
        for m in 1..=5u32 {
            for n in 1..=5u32 {
                if let Ok(ratio) = FrequencyRatio::new(m, n) {
                    assert_eq!(commutator_polynomial(&ratio).degree_s0(), m + n - 1, "{ratio}");
                }
            }
        }
    }
}
