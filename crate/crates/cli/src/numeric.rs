//! Decimal renderings and closed-form hints.

use du2_core::poly::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::report::number;

/// Values this close to zero are rendered as exactly zero.
pub const SNAP: f64 = 1e-13;
const HINT_TOL: f64 = 1e-10;
const HINT_MAX_DEN: u64 = 1000;

/// `x` rounded to 12 significant digits, with round-off noise snapped to zero.
pub fn decimal(x: f64) -> Value {
    if x.abs() < SNAP {
        return number(0.0);
    }
    number(round12(x))
}

/// `x` rounded to 12 significant digits without snapping; for residuals.
pub fn residual(x: f64) -> Value {
    number(round12(x))
}

fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// `"13/4"`, `"-1"`.
pub fn exact(r: &Rational) -> Value {
    Value::from(r.to_string())
}

/// Closed form `+-sqrt(a/b)` (or a plain rational) when `x^2` lies within
/// `1e-10` of a rational with denominator at most 1000.
pub fn exact_hint(x: f64) -> Option<String> {
    if x.abs() < SNAP {
        return Some("0".into());
    }
    let square = x * x;
    let (num, den) = (1..=HINT_MAX_DEN).find_map(|den| {
        let num = (square * den as f64).round();
        ((square - num / den as f64).abs() <= HINT_TOL * square.max(1.0) && num > 0.0).then_some((num as u64, den))
    })?;
    let g = gcd(num, den);
    let body = sqrt_text(num / g, den / g);
    Some(if x < 0.0 { format!("-{body}") } else { body })
}

/// Exact `sqrt(r)` for a non-negative rational, simplified when `r` is a square.
pub fn sqrt_hint(r: &Rational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    debug_assert!(!r.is_negative());
    let (num, den) = (r.numer(), r.denom());
    let (rn, rd) = (num.sqrt(), den.sqrt());
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        return ratio_text(&rn, &rd);
    }
    format!("sqrt({})", ratio_text(num, den))
}

fn sqrt_text(num: u64, den: u64) -> String {
    let (rn, rd) = (isqrt(num), isqrt(den));
    if rn * rn == num && rd * rd == den {
        ratio_text(&BigInt::from(rn), &BigInt::from(rd))
    } else {
        format!("sqrt({})", ratio_text(&BigInt::from(num), &BigInt::from(den)))
    }
}

fn ratio_text(num: &BigInt, den: &BigInt) -> String {
    if den == &BigInt::from(1) {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn isqrt(v: u64) -> u64 {
    let r = (v as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == v).unwrap_or(r)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
