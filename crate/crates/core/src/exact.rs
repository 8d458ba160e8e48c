//! Exact arithmetic: Gaussian integers, rational complex numbers and the
//! component-wise floor.
//!
//! Every value here is immutable and unbounded. Rationals are
//! [`BigRational`], which keeps itself reduced with a positive denominator,
//! so structural equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact rational number.
pub type Rational = BigRational;

/// Shorthand for `p / q` as a [`Rational`]. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a [`Rational`].
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Canonical string form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, `q > 0` after reduction).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// An element of ℤ[i].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: i64, im: i64) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn from_big(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    /// Squared absolute value `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `|re| + |im|`.
    pub fn l1(&self) -> BigInt {
        self.re.abs() + self.im.abs()
    }

    pub fn to_qcomplex(&self) -> QComplex {
        QComplex {
            re: Rational::from_integer(self.re.clone()),
            im: Rational::from_integer(self.im.clone()),
        }
    }

    /// Small-value view, used for display and JSON.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.re.to_i64()?, self.im.to_i64()?))
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re, im: -self.im }
    }
}

fn big_to_json<S: SerializeSeq>(seq: &mut S, v: &BigInt) -> Result<(), S::Error> {
    match v.to_i64() {
        Some(x) => seq.serialize_element(&x),
        None => seq.serialize_element(&v.to_string()),
    }
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        big_to_json(&mut seq, &self.re)?;
        big_to_json(&mut seq, &self.im)?;
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Text(String),
}

impl JsonInt {
    fn into_big<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            JsonInt::Small(v) => Ok(v.into()),
            JsonInt::Text(t) => BigInt::from_str(&t).map_err(E::custom),
        }
    }
}

impl<'de> Deserialize<'de> for GaussianInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (re, im) = <(JsonInt, JsonInt)>::deserialize(d)?;
        Ok(GaussianInt { re: re.into_big()?, im: im.into_big()? })
    }
}

/// A complex number with exact rational parts. Doubles as a point of the
/// parameter plane.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QComplex {
    pub re: Rational,
    pub im: Rational,
}

impl QComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        QComplex { re, im }
    }

    /// `(p1/q1, p2/q2)`.
    pub fn frac(p1: i64, q1: i64, p2: i64, q2: i64) -> Self {
        QComplex { re: ratio(p1, q1), im: ratio(p2, q2) }
    }

    pub fn ints(re: i64, im: i64) -> Self {
        QComplex { re: rat_int(re), im: rat_int(im) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        QComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, t: &Rational) -> Self {
        QComplex { re: &self.re * t, im: &self.im * t }
    }

    /// Exact complex product.
    pub fn mul(&self, o: &QComplex) -> QComplex {
        QComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// `1 / self`; `None` for zero.
    pub fn recip(&self) -> Option<QComplex> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(QComplex { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Real dot product when read as plane vectors.
    pub fn dot(&self, o: &QComplex) -> Rational {
        &self.re * &o.re + &self.im * &o.im
    }

    /// `self.re * o.im - self.im * o.re`; positive when `o` lies
    /// counter-clockwise of `self`.
    pub fn cross(&self, o: &QComplex) -> Rational {
        &self.re * &o.im - &self.im * &o.re
    }

    /// Parses `"p/q,p/q"`.
    pub fn parse(s: &str) -> Result<QComplex, Error> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"re,im\", got {s:?}")))?;
        Ok(QComplex { re: parse_rational(a)?, im: parse_rational(b)? })
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.re), format_rational(&self.im))
    }
}

impl Add for &QComplex {
    type Output = QComplex;
    fn add(self, o: &QComplex) -> QComplex {
        QComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &QComplex {
    type Output = QComplex;
    fn sub(self, o: &QComplex) -> QComplex {
        QComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Neg for &QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex { re: -&self.re, im: -&self.im }
    }
}

impl Serialize for QComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&format_rational(&self.re))?;
        seq.serialize_element(&format_rational(&self.im))?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = QComplex;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a pair of rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<QComplex, A::Error> {
                let re: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let im: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
                Ok(QComplex {
                    re: parse_rational(&re).map_err(de::Error::custom)?,
                    im: parse_rational(&im).map_err(de::Error::custom)?,
                })
            }
        }
        d.deserialize_seq(V)
    }
}

/// Serde adapter for a single [`Rational`] as its canonical string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let t = String::deserialize(d)?;
        parse_rational(&t).map_err(de::Error::custom)
    }
}

/// Floor toward −∞ of a rational.
pub fn floor_rational(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// `⌊re⌋ + i⌊im⌋`.
pub fn complex_floor(z: &QComplex) -> GaussianInt {
    GaussianInt { re: floor_rational(&z.re), im: floor_rational(&z.im) }
}

/// Exact product `r · a` of a rational complex and a Gaussian integer.
pub fn qc_mul(r: &QComplex, a: &GaussianInt) -> QComplex {
    let (x, y) = (&r.re, &r.im);
    let (a, b) = (Rational::from_integer(a.re.clone()), Rational::from_integer(a.im.clone()));
    QComplex { re: x * &a - y * &b, im: x * &b + y * &a }
}

/// A parameter prepared for fast repeated multiplication: `r = (x + iy) / den`
/// with integer `x`, `y` and `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledParam {
    pub x: BigInt,
    pub y: BigInt,
    pub den: BigInt,
}

impl ScaledParam {
    pub fn new(r: &QComplex) -> Self {
        let den = r.re.denom().lcm(r.im.denom());
        let x = r.re.numer() * (&den / r.re.denom());
        let y = r.im.numer() * (&den / r.im.denom());
        ScaledParam { x, y, den }
    }

    /// `⌊r · a⌋` without building intermediate rationals.
    pub fn floor_mul(&self, a: &GaussianInt) -> GaussianInt {
        let re = &self.x * &a.re - &self.y * &a.im;
        let im = &self.x * &a.im + &self.y * &a.re;
        GaussianInt { re: re.div_floor(&self.den), im: im.div_floor(&self.den) }
    }
}
