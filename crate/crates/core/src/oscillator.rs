//! Frequency ratios, quantum-number bookkeeping and exact spectra.
//!
//! The oscillator `H = (p_x^2 + p_y^2 + x^2/m^2 + y^2/n^2) / 2` has Cartesian
//! levels `(n_x + 1/2)/m + (n_y + 1/2)/n`. For coprime `m, n` every level is a
//! single irrep `(N, p, q)` of dimension `N + 1` with
//! `E = N + (2p-1)/(2m) + (2q-1)/(2n)`. Everything here is exact.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::poly::{self, Rational};

/// Coprime pair `m:n` of frequency denominators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrequencyRatio {
    m: u32,
    n: u32,
}

impl FrequencyRatio {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::ZeroFrequency { m, n });
        }
        let gcd = m.gcd(&n);
        if gcd != 1 {
            return Err(Error::NonCoprime { m, n, gcd });
        }
        Ok(FrequencyRatio { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn check(&self, label: &IrrepLabel) -> Result<()> {
        if (1..=self.m).contains(&label.p) && (1..=self.n).contains(&label.q) {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange {
                level: label.level,
                p: label.p,
                q: label.q,
                m: self.m,
                n: self.n,
            })
        }
    }

    /// All labels with `N <= max_level`, ordered by `(N, p, q)`.
    pub fn irreps(&self, max_level: u32) -> impl Iterator<Item = IrrepLabel> + '_ {
        (0..=max_level).flat_map(move |level| {
            (1..=self.m).flat_map(move |p| (1..=self.n).map(move |q| IrrepLabel { level, p, q }))
        })
    }

    /// `(2p - 1) / (2m)`.
    pub fn x_offset(&self, p: u32) -> Rational64 {
        Rational64::new(2 * p as i64 - 1, 2 * self.m as i64)
    }

    /// `(2q - 1) / (2n)`.
    pub fn y_offset(&self, q: u32) -> Rational64 {
        Rational64::new(2 * q as i64 - 1, 2 * self.n as i64)
    }
}

impl fmt::Display for FrequencyRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartesianState {
    pub nx: u32,
    pub ny: u32,
}

impl CartesianState {
    pub fn new(nx: u32, ny: u32) -> Self {
        CartesianState { nx, ny }
    }
}

impl fmt::Display for CartesianState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.nx, self.ny)
    }
}

/// Irrep label `(N, p, q)`; `level` is the representation index `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub level: u32,
    pub p: u32,
    pub q: u32,
}

impl IrrepLabel {
    pub fn new(level: u32, p: u32, q: u32) -> Self {
        IrrepLabel { level, p, q }
    }

    pub fn dimension(&self) -> usize {
        self.level as usize + 1
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.level, self.p, self.q)
    }
}

/// Basis vector `|N,(p,q),k>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepState {
    pub label: IrrepLabel,
    pub k: u32,
}

impl IrrepState {
    pub fn new(label: IrrepLabel, k: u32) -> Result<Self> {
        if k > label.level {
            return Err(Error::IndexOutOfRange { k, level: label.level });
        }
        Ok(IrrepState { label, k })
    }
}

/// Exact energy in units of the base frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Energy(pub Rational64);

impl Energy {
    pub fn value(&self) -> Rational64 {
        self.0
    }

    pub fn to_big(&self) -> Rational {
        poly::rat(*self.0.numer(), *self.0.denom())
    }

    pub fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn make_ratio(m: u32, n: u32) -> Result<FrequencyRatio> {
    FrequencyRatio::new(m, n)
}

pub fn energy_of_irrep(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Energy> {
    ratio.check(label)?;
    Ok(Energy(
        Rational64::from_integer(label.level as i64) + ratio.x_offset(label.p) + ratio.y_offset(label.q),
    ))
}

pub fn energy_of_cartesian(state: &CartesianState, ratio: &FrequencyRatio) -> Energy {
    Energy(
        Rational64::new(2 * state.nx as i64 + 1, 2 * ratio.m as i64)
            + Rational64::new(2 * state.ny as i64 + 1, 2 * ratio.n as i64),
    )
}

/// The constant `u` with `S0 = k + u` on the irrep.
pub fn s0_shift(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Rational64> {
    ratio.check(label)?;
    Ok((ratio.x_offset(label.p) - ratio.y_offset(label.q) - Rational64::from_integer(label.level as i64)) / 2)
}

pub fn cartesian_to_irrep(state: &CartesianState, ratio: &FrequencyRatio) -> IrrepState {
    let (kx, rx) = state.nx.div_rem(&ratio.m);
    let (ky, ry) = state.ny.div_rem(&ratio.n);
    IrrepState {
        label: IrrepLabel {
            level: kx + ky,
            p: rx + 1,
            q: ry + 1,
        },
        k: kx,
    }
}

pub fn irrep_to_cartesian(state: &IrrepState, ratio: &FrequencyRatio) -> Result<CartesianState> {
    ratio.check(&state.label)?;
    let IrrepState { label, k } = *state;
    if k > label.level {
        return Err(Error::IndexOutOfRange { k, level: label.level });
    }
    Ok(CartesianState {
        nx: k * ratio.m + label.p - 1,
        ny: (label.level - k) * ratio.n + label.q - 1,
    })
}

/// Cartesian members of an irrep, ordered by `k`.
pub fn irrep_members(label: &IrrepLabel, ratio: &FrequencyRatio) -> Result<Vec<CartesianState>> {
    (0..=label.level)
        .map(|k| irrep_to_cartesian(&IrrepState { label: *label, k }, ratio))
        .collect()
}

/// One degenerate energy level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub energy: Energy,
    pub label: IrrepLabel,
    pub degeneracy: usize,
    /// Cartesian states of the level, ordered by `k`.
    pub members: Vec<CartesianState>,
}

/// The lowest `count` distinct levels, ascending.
///
/// Cartesian states are collected in the region `E < bound`, which holds every
/// member of every level below `bound`; the bound doubles until it covers
/// `count` levels.
pub fn enumerate_levels(ratio: &FrequencyRatio, count: usize) -> Vec<Level> {
    if count == 0 {
        return Vec::new();
    }
    let (m, n) = (ratio.m as i64, ratio.n as i64);
    let mut bound = (count as i64 / (m * n)).max(1) + 1;
    loop {
        let limit = Rational64::from_integer(bound);
        let mut levels: BTreeMap<Energy, Vec<CartesianState>> = BTreeMap::new();
        // (nx + 1/2)/m < bound  <=>  nx < m*bound - 1/2
        for nx in 0..(m * bound) as u32 {
            for ny in 0..(n * bound) as u32 {
                let state = CartesianState { nx, ny };
                let e = energy_of_cartesian(&state, ratio);
                if e.0 >= limit {
                    break;
                }
                levels.entry(e).or_default().push(state);
            }
        }
        if levels.len() >= count {
            return levels
                .into_iter()
                .take(count)
                .map(|(energy, members)| {
                    let label = cartesian_to_irrep(&members[0], ratio).label;
                    debug_assert!(members.iter().all(|s| cartesian_to_irrep(s, ratio).label == label));
                    Level {
                        energy,
                        label,
                        degeneracy: members.len(),
                        members,
                    }
                })
                .collect();
        }
        bound *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: u32, n: u32) -> FrequencyRatio {
        FrequencyRatio::new(m, n).unwrap()
    }

    fn e(num: i64, den: i64) -> Energy {
        Energy(Rational64::new(num, den))
    }

    #[test]
    fn ratio_validation() {
        assert_eq!(r(1, 2).m(), 1);
        assert_eq!(r(1, 2).n(), 2);
        assert!(FrequencyRatio::new(1, 1).is_ok());
        assert_eq!(FrequencyRatio::new(2, 4), Err(Error::NonCoprime { m: 2, n: 4, gcd: 2 }));
        assert!(matches!(FrequencyRatio::new(0, 3), Err(Error::ZeroFrequency { .. })));
        // order is kept as given
        assert_eq!(r(3, 2).m(), 3);
    }

    #[test]
    fn irrep_energies() {
        assert_eq!(energy_of_irrep(&IrrepLabel::new(2, 1, 2), &r(1, 2)).unwrap(), e(13, 4));
        assert_eq!(energy_of_irrep(&IrrepLabel::new(0, 1, 1), &r(1, 1)).unwrap(), e(1, 1));
        assert_eq!(energy_of_irrep(&IrrepLabel::new(0, 1, 1), &r(2, 3)).unwrap(), e(5, 12));
        assert_eq!(energy_of_cartesian(&CartesianState::new(0, 0), &r(2, 3)), e(5, 12));
        assert!(matches!(
            energy_of_irrep(&IrrepLabel::new(1, 1, 3), &r(1, 2)),
            Err(Error::LabelOutOfRange { .. })
        ));
    }

    #[test]
    fn cartesian_energies() {
        assert_eq!(energy_of_cartesian(&CartesianState::new(0, 0), &r(1, 2)), e(3, 4));
        assert_eq!(energy_of_cartesian(&CartesianState::new(1, 2), &r(1, 2)), e(11, 4));
        assert_eq!(energy_of_cartesian(&CartesianState::new(0, 0), &r(1, 1)), e(1, 1));
    }

    #[test]
    fn label_maps() {
        let ratio = r(1, 2);
        let s = cartesian_to_irrep(&CartesianState::new(1, 2), &ratio);
        assert_eq!(
            s,
            IrrepState {
                label: IrrepLabel::new(2, 1, 1),
                k: 1
            }
        );
        let s = cartesian_to_irrep(&CartesianState::new(0, 5), &ratio);
        assert_eq!(
            s,
            IrrepState {
                label: IrrepLabel::new(2, 1, 2),
                k: 0
            }
        );
        for (m, n) in [(1, 1), (2, 3), (5, 4)] {
            let s = cartesian_to_irrep(&CartesianState::new(0, 0), &r(m, n));
            assert_eq!(
                s,
                IrrepState {
                    label: IrrepLabel::new(0, 1, 1),
                    k: 0
                }
            );
        }

        let back = irrep_to_cartesian(&IrrepState::new(IrrepLabel::new(2, 1, 1), 2).unwrap(), &ratio).unwrap();
        assert_eq!(back, CartesianState::new(2, 0));
        let ground = irrep_to_cartesian(&IrrepState::new(IrrepLabel::new(0, 1, 1), 0).unwrap(), &r(2, 3)).unwrap();
        assert_eq!(ground, CartesianState::new(0, 0));
        assert!(IrrepState::new(IrrepLabel::new(1, 1, 1), 2).is_err());
    }

    #[test]
    fn round_trip_window_2_3() {
        let ratio = r(2, 3);
        for nx in 0..12 {
            for ny in 0..12 {
                let c = CartesianState::new(nx, ny);
                let s = cartesian_to_irrep(&c, &ratio);
                assert_eq!(irrep_to_cartesian(&s, &ratio).unwrap(), c);
                assert_eq!(
                    energy_of_irrep(&s.label, &ratio).unwrap(),
                    energy_of_cartesian(&c, &ratio)
                );
            }
        }
    }

    #[test]
    fn degeneracy_patterns() {
        let degs =
            |m, n, count| -> Vec<usize> { enumerate_levels(&r(m, n), count).iter().map(|l| l.degeneracy).collect() };
        assert_eq!(degs(1, 2, 6), [1, 1, 2, 2, 3, 3]);
        assert_eq!(degs(2, 3, 15), [1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3]);
        assert_eq!(degs(1, 1, 4), [1, 2, 3, 4]);
        assert_eq!(degs(1, 3, 9), [1, 1, 1, 2, 2, 2, 3, 3, 3]);
        assert!(enumerate_levels(&r(1, 2), 0).is_empty());
    }

    #[test]
    fn level_members_are_ordered_by_k() {
        let levels = enumerate_levels(&r(1, 2), 6);
        let last = &levels[5];
        assert_eq!(last.energy, e(13, 4));
        assert_eq!(last.label, IrrepLabel::new(2, 1, 2));
        assert_eq!(
            last.members,
            [
                CartesianState::new(0, 5),
                CartesianState::new(1, 3),
                CartesianState::new(2, 1)
            ]
        );
        assert_eq!(irrep_members(&last.label, &r(1, 2)).unwrap(), last.members);
    }

    #[test]
    fn s0_shift_values() {
        assert_eq!(
            s0_shift(&IrrepLabel::new(1, 1, 1), &r(1, 2)).unwrap(),
            Rational64::new(-3, 8)
        );
        assert_eq!(
            s0_shift(&IrrepLabel::new(0, 1, 1), &r(1, 1)).unwrap(),
            Rational64::from_integer(0)
        );
    }
}
