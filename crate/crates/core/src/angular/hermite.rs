use crate::algebra::{structure_function, Form};
use crate::error::Result;
use crate::oscillator::{FrequencyRatio, IrrepLabel};
use crate::poly::{int, Poly};

/// `H_0, ..., H_{N+1}` from `H_{k+1}(x) = 2x H_k(x) - 2 Phi(k) H_{k-1}(x)`,
/// `H_{-1} = 0`, `H_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedHermite {
    pub label: IrrepLabel,
    pub ratio: FrequencyRatio,
    polys: Vec<Poly>,
}

impl GeneralizedHermite {
    pub fn get(&self, k: usize) -> &Poly {
        &self.polys[k]
    }

    /// `H_{N+1}`, whose roots at `x = ell / sqrt(2)` are the angular eigenvalues.
    pub fn characteristic(&self) -> &Poly {
        self.polys.last().expect("at least H_0 and H_1")
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }
}

pub fn hermite_sequence(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<GeneralizedHermite> {
    let sf = structure_function(label, ratio, Form::Product)?;
    let two_x = Poly::linear(int(2), int(0));
    let mut polys = vec![Poly::one()];
    let mut prev = Poly::zero();
    for k in 0..=label.level {
        let current = polys.last().unwrap();
        let next = &(&two_x * current) - &prev.scale(&(int(2) * sf.at(k)));
        prev = current.clone();
        polys.push(next);
    }
    Ok(GeneralizedHermite {
        label: *label,
        ratio: *ratio,
        polys,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(m: u32, n: u32, level: u32, p: u32, q: u32) -> GeneralizedHermite {
        hermite_sequence(&IrrepLabel::new(level, p, q), &FrequencyRatio::new(m, n).unwrap()).unwrap()
    }

    #[test]
    fn low_order_members() {
        let h = seq(1, 1, 1, 1, 1);
        assert_eq!(h.polys().len(), 3);
        assert_eq!(h.get(0), &Poly::one());
        assert_eq!(h.get(1), &Poly::linear(int(2), int(0)));
        assert_eq!(h.get(2), &Poly::new(vec![int(-2), int(0), int(4)]));

        // Phi(1) = 1 * 1 * (1 + 1/2 - 1) = 1/2 for 1:2, N = 1, q = 1
        let h = seq(1, 2, 1, 1, 1);
        assert_eq!(h.characteristic(), &Poly::new(vec![int(-1), int(0), int(4)]));
        let h = seq(1, 2, 1, 1, 2);
        assert_eq!(h.characteristic(), &Poly::new(vec![int(-3), int(0), int(4)]));
        assert_eq!(seq(3, 2, 4, 2, 1).get(1), &Poly::linear(int(2), int(0)));
    }

    #[test]
    fn degree_and_parity() {
        for (m, n) in [(1, 1), (1, 2), (2, 3), (3, 4)] {
            let ratio = FrequencyRatio::new(m, n).unwrap();
            for label in ratio.irreps(6) {
                let h = hermite_sequence(&label, &ratio).unwrap();
                for (k, poly) in h.polys().iter().enumerate() {
                    assert_eq!(poly.degree(), Some(k));
                    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                    assert_eq!(poly.reflect(), poly.scale(&sign));
                }
            }
        }
    }
}
