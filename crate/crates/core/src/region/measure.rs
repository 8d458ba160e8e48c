//! Certified brackets for the perimeter and area of 𝒢_C.
//!
//! The finite part sums the chain through pike `N` with every square root
//! rounded outwards at a binary scale `2^-bits`. The rest, pikes `N+1, …`,
//! is a sum of rational functions of `n` bounded by [`series::tail_bracket`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::series::{tail_bracket, Poly, RatFn};
use super::{row, vertex_int, FORMULAS};
use crate::error::{Error, Result};
use crate::exact::{rat_int, Rational};

/// A closed interval `[low, high]` of reals with rational ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub low: Rational,
    pub high: Rational,
}

impl Bracket {
    pub fn width(&self) -> Rational {
        &self.high - &self.low
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.low <= q && q <= &self.high
    }

    /// Whether the bracket contains the number written as a decimal.
    pub fn contains_decimal(&self, s: &str) -> Result<bool> {
        Ok(self.contains(&parse_decimal(s)?))
    }
}

impl Serialize for Bracket {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Bracket", 2)?;
        st.serialize_field("low", &to_decimal(&self.low, 40, false))?;
        st.serialize_field("high", &to_decimal(&self.high, 40, true))?;
        st.end()
    }
}

pub fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a decimal number: {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let q = Rational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    Ok(if neg { -q } else { q })
}

/// `q` to `digits` decimals, rounded down or up.
pub fn to_decimal(q: &Rational, digits: u32, up: bool) -> String {
    if q.is_negative() {
        return format!("-{}", to_decimal(&-q, digits, !up));
    }
    let scale = BigInt::from(10).pow(digits);
    let scaled = q * Rational::from_integer(scale.clone());
    let v = if up { scaled.ceil().to_integer() } else { scaled.floor().to_integer() };
    let (int, frac) = v.div_mod_floor(&scale);
    format!("{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

type Pt = (i128, i128, i128);

/// The chain vertices from `P_5(0)` to the start of pike 8.
fn prefix_points() -> Vec<Pt> {
    let mut pts: Vec<Pt> = (0..8).flat_map(row).map(|(i, n, _, _)| vertex_int(i, n).unwrap()).collect();
    pts.remove(0);
    pts.push(vertex_int(1, 8).unwrap());
    pts
}

fn pike_points(n: i64) -> Vec<Pt> {
    let mut pts: Vec<Pt> = (1..=10).map(|i| vertex_int(i, n).unwrap()).collect();
    pts.push(vertex_int(1, n + 1).unwrap());
    pts
}

/// Sum over consecutive pairs of `[⌊2^bits·f⌋, ⌈2^bits·f⌉]`.
fn fold_edges(pts: &[Pt], bits: u32, f: &impl Fn(&Pt, &Pt, u32) -> (BigInt, BigInt)) -> (BigInt, BigInt) {
    pts.windows(2).fold((BigInt::zero(), BigInt::zero()), |(lo, hi), w| {
        let (l, h) = f(&w[0], &w[1], bits);
        (lo + l, hi + h)
    })
}

fn length_bounds(p: &Pt, q: &Pt, bits: u32) -> (BigInt, BigInt) {
    let dx = BigInt::from(p.0) * q.2 - BigInt::from(q.0) * p.2;
    let dy = BigInt::from(p.1) * q.2 - BigInt::from(q.1) * p.2;
    let den = BigInt::from(p.2) * q.2;
    let r = ((&dx * &dx + &dy * &dy) << (2 * bits)).sqrt();
    let lo = r.div_floor(&den);
    let hi = (r + 1u32).div_ceil(&den);
    (lo, hi)
}

fn area_bounds(p: &Pt, q: &Pt, bits: u32) -> (BigInt, BigInt) {
    let cross = (BigInt::from(p.0) * q.1 - BigInt::from(q.0) * p.1).abs() << bits;
    let den = BigInt::from(p.2) * q.2 * 2;
    (cross.div_floor(&den), cross.div_ceil(&den))
}

fn finite_part(n_pikes: u64, bits: u32, f: impl Fn(&Pt, &Pt, u32) -> (BigInt, BigInt) + Sync) -> (Rational, Rational) {
    let (lo0, hi0) = fold_edges(&prefix_points(), bits, &f);
    let (lo, hi) = (8..n_pikes as usize + 1)
        .into_par_iter()
        .with_min_len(256)
        .map(|n| fold_edges(&pike_points(n as i64), bits, &f))
        .reduce(|| (BigInt::zero(), BigInt::zero()), |a, b| (a.0 + b.0, a.1 + b.1));
    let scale = BigInt::one() << bits;
    (Rational::new(lo0 + lo, scale.clone()), Rational::new(hi0 + hi, scale))
}

/// The pike edges `P_i(n) → P_{i+1}(n)` and `P_10(n) → P_1(n+1)` as
/// `(x, y)` rational functions of each endpoint.
fn pike_edges() -> Vec<((RatFn, RatFn), (RatFn, RatFn))> {
    let point = |i: usize, shift: i64| {
        let (c, d, e) = FORMULAS[i - 1];
        let s = rat_int(shift);
        let den = Poly::ints(&d).shift(&s);
        let x = &den - &Poly::ints(&[c]);
        let y = Poly::ints(&e).shift(&s);
        (RatFn::new(x, den.clone()), RatFn::new(y, den))
    };
    (1..=10).map(|i| (point(i, 0), if i == 10 { point(1, 1) } else { point(i + 1, 0) })).collect()
}

fn diff(a: &RatFn, b: &RatFn) -> RatFn {
    RatFn::new(&(&b.num * &a.den) - &(&a.num * &b.den), &a.den * &b.den)
}

fn check(n_pikes: u64, bits: u32) -> Result<()> {
    if n_pikes < 8 {
        return Err(Error::Precondition(format!("at least 8 pikes are needed, got {n_pikes}")));
    }
    if n_pikes > 1 << 24 || bits == 0 || bits > 4096 {
        return Err(Error::Precondition("pike count or precision out of range".into()));
    }
    Ok(())
}

/// A bracket for the perimeter of 𝒢_C: twice the chain length from the origin.
///
/// Beyond pike `N` each edge has length between `|Δy|` and `|Δx| + |Δy|`,
/// both rational functions of `n`.
pub fn perimeter_estimate(n_pikes: u64, bits: u32) -> Result<Bracket> {
    check(n_pikes, bits)?;
    let (lo, hi) = finite_part(n_pikes, bits, length_bounds);
    let big_n = n_pikes as i64;
    let from = rat_int(big_n + 1);
    let (mut tail_lo, mut tail_hi) = (Rational::zero(), Rational::zero());
    for ((x0, y0), (x1, y1)) in pike_edges() {
        let dy = diff(&y0, &y1).abs_from(&from)?;
        let dx = diff(&x0, &x1).abs_from(&from)?;
        let (l, h) = tail_bracket(&dy, big_n, 3)?;
        tail_lo += l.max(Rational::zero());
        tail_hi += h;
        if !dx.num.is_zero() {
            tail_hi += tail_bracket(&dx, big_n, 3)?.1;
        }
    }
    let two = rat_int(2);
    Ok(Bracket { low: &two * (lo + tail_lo), high: &two * (hi + tail_hi) })
}

/// A bracket for the area of 𝒢_C: twice the fan of triangles `O, v_k, v_{k+1}`.
pub fn area_estimate(n_pikes: u64, bits: u32) -> Result<Bracket> {
    check(n_pikes, bits)?;
    let (lo, hi) = finite_part(n_pikes, bits, area_bounds);
    let big_n = n_pikes as i64;
    let from = rat_int(big_n + 1);
    let (mut tail_lo, mut tail_hi) = (Rational::zero(), Rational::zero());
    for ((x0, y0), (x1, y1)) in pike_edges() {
        let cross = RatFn::new(
            (&(&x0.num * &y1.num) - &(&x1.num * &y0.num)).scale(&Rational::new(1.into(), 2.into())),
            &x0.den * &y1.den,
        );
        let tri = cross.abs_from(&from)?;
        let (l, h) = tail_bracket(&tri, big_n, 3)?;
        tail_lo += l.max(Rational::zero());
        tail_hi += h;
    }
    let two = rat_int(2);
    Ok(Bracket { low: &two * (lo + tail_lo), high: &two * (hi + tail_hi) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn decimals_round_trip() {
        assert_eq!(to_decimal(&ratio(1, 3), 5, false), "0.33333");
        assert_eq!(to_decimal(&ratio(1, 3), 5, true), "0.33334");
        assert_eq!(to_decimal(&ratio(-1, 3), 3, false), "-0.334");
        assert_eq!(to_decimal(&ratio(-7, 2), 2, true), "-3.50");
        assert_eq!(to_decimal(&rat_int(2), 2, true), "2.00");
        assert_eq!(parse_decimal("7.0317").unwrap(), ratio(70317, 10000));
        assert_eq!(parse_decimal("-.5").unwrap(), ratio(-1, 2));
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("").is_err());
    }

    #[test]
    fn length_bounds_bracket_exact_value() {
        // (0,0) → (3/5, 4/5) has length 1.
        let (lo, hi) = length_bounds(&(0, 0, 1), &(3, 4, 5), 64);
        let one = BigInt::one() << 64;
        assert!(lo <= one && one <= hi && &hi - &lo <= BigInt::from(2));
    }

    #[test]
    fn small_brackets_shrink() {
        let perimeter = parse_decimal("7.0317015814551008990992430035469692210269").unwrap();
        let area = parse_decimal("1.1616244963841538925201560564707674346082").unwrap();
        let a = perimeter_estimate(50, 128).unwrap();
        let b = perimeter_estimate(200, 128).unwrap();
        assert!(a.contains(&perimeter) && b.contains(&perimeter), "{a:?} {b:?}");
        assert!(b.width() < a.width());
        let a = area_estimate(50, 128).unwrap();
        let b = area_estimate(200, 128).unwrap();
        assert!(a.contains(&area) && b.contains(&area), "{a:?} {b:?}");
        assert!(b.width() < a.width());
        assert!(perimeter_estimate(7, 64).is_err());
    }
}
