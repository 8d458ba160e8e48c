//! Univariate polynomials and rational functions over ℚ, just enough to
//! bound tails `Σ_{n>N} f(n)` of rational series rigorously.
//!
//! A polynomial is certified nonnegative on `[N, ∞)` when all coefficients
//! of `p(N + t)` are nonnegative.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    /// Coefficients from the constant term upwards.
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    /// `p(n) · n^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }

    /// `p(t + s)` as a polynomial in `t`.
    pub fn shift(&self, s: &Rational) -> Poly {
        let lin = Poly::new(vec![s.clone(), Rational::one()]);
        let mut acc = Poly::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Whether `p(n) ≥ 0` for all real `n ≥ from`, by the shifted-coefficient
    /// test (sufficient, not necessary).
    pub fn nonneg_from(&self, from: &Rational) -> bool {
        self.shift(from).0.iter().all(|c| !c.is_negative())
    }

    /// Whether `p(n) > 0` for all real `n ≥ from`.
    pub fn positive_from(&self, from: &Rational) -> bool {
        let s = self.shift(from);
        s.0.first().is_some_and(|c| c.is_positive()) && s.0.iter().all(|c| !c.is_negative())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &-o
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

/// `num / den`.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> RatFn {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFn { num, den }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.num.eval(x) / self.den.eval(x)
    }

    /// `f(n + s)`.
    pub fn shift(&self, s: &Rational) -> RatFn {
        RatFn::new(self.num.shift(s), self.den.shift(s))
    }

    pub fn neg(&self) -> RatFn {
        RatFn::new(-&self.num, self.den.clone())
    }

    /// `|f|` on `[from, ∞)`, when the sign there is certified constant.
    pub fn abs_from(&self, from: &Rational) -> Result<RatFn> {
        let prod = &self.num * &self.den;
        if prod.nonneg_from(from) {
            Ok(self.clone())
        } else if (-&prod).nonneg_from(from) {
            Ok(self.neg())
        } else {
            Err(Error::Precondition(format!("sign of a series term is not certified constant from {from}")))
        }
    }

    /// Coefficients `c_k0, c_k0+1, …` of the expansion `Σ c_k n^{−k}` at
    /// infinity, with `k0 = deg den − deg num`.
    fn expansion(&self, terms: usize) -> (usize, Vec<Rational>) {
        let dp = self.num.degree().unwrap_or(0);
        let dq = self.den.degree().expect("nonzero denominator");
        // In t = 1/n: num(n) = t^{−dp} P(t), den(n) = t^{−dq} Q(t).
        let p: Vec<Rational> = self.num.coeffs().iter().rev().cloned().collect();
        let q: Vec<Rational> = self.den.coeffs().iter().rev().cloned().collect();
        let mut out = Vec::with_capacity(terms);
        let mut rem: Vec<Rational> = (0..terms).map(|i| p.get(i).cloned().unwrap_or_else(Rational::zero)).collect();
        for i in 0..terms {
            let c = &rem[i] / &q[0];
            for j in i..terms {
                if let Some(qj) = q.get(j - i) {
                    rem[j] -= &c * qj;
                }
            }
            out.push(c);
        }
        (dq.saturating_sub(dp), out)
    }
}

/// `Σ_{n>N} n^{−k}` lies in `[1/((k−1)(N+1)^{k−1}), 1/((k−1)N^{k−1})]`.
fn power_tail(k: usize, n: &Rational) -> (Rational, Rational) {
    assert!(k >= 2);
    let km1 = rat_int(k as i64 - 1);
    let pow = |x: Rational| (0..k - 1).fold(Rational::one(), |acc, _| acc * &x);
    let lo = Rational::one() / (&km1 * pow(n + Rational::one()));
    let hi = Rational::one() / (&km1 * pow(n.clone()));
    (lo, hi)
}

/// A rigorous bracket for `Σ_{n>N} f(n)`.
///
/// Uses `terms` terms of the expansion of `f` at infinity and bounds the
/// remainder by `C / n^K` with a certified constant `C`. Requires the
/// denominator to keep one sign on `[N, ∞)` and `f = O(n^{−2})`.
pub fn tail_bracket(f: &RatFn, big_n: i64, terms: usize) -> Result<(Rational, Rational)> {
    let from = rat_int(big_n);
    let f = if f.den.positive_from(&from) {
        f.clone()
    } else if (-&f.den).positive_from(&from) {
        RatFn::new(-&f.num, -&f.den)
    } else {
        return Err(Error::Precondition("denominator sign is not certified".into()));
    };
    if f.num.is_zero() {
        return Ok((Rational::zero(), Rational::zero()));
    }
    let (k0, cs) = f.expansion(terms);
    if k0 < 2 {
        return Err(Error::Precondition("series terms do not decay like n^-2".into()));
    }
    let big_k = k0 + terms - 1;
    // R(n) = f(n) − Σ c_k n^{−k} = (num·n^K − den·T(n)) / (den·n^K).
    let t = Poly::new((0..=big_k - k0).map(|j| cs[big_k - k0 - j].clone()).collect());
    let pr = &f.num.shl(big_k) - &(&f.den * &t);
    let qr = f.den.shl(big_k);
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for (i, c) in cs.iter().enumerate() {
        let (s_lo, s_hi) = power_tail(k0 + i, &from);
        if c.is_negative() {
            lo += c * &s_hi;
            hi += c * &s_lo;
        } else {
            lo += c * &s_lo;
            hi += c * &s_hi;
        }
    }
    if !pr.is_zero() {
        let c = remainder_constant(&pr, &qr, big_k + 1, &from)?;
        let (_, s_hi) = power_tail(big_k + 1, &from);
        lo -= &c * &s_hi;
        hi += &c * &s_hi;
    }
    Ok((lo, hi))
}

/// A certified `C` with `|p(n)/q(n)| ≤ C n^{−k}` on `[from, ∞)`, `q > 0` there.
fn remainder_constant(p: &Poly, q: &Poly, k: usize, from: &Rational) -> Result<Rational> {
    let pk = p.shl(k);
    let at = (pk.eval(from) / q.eval(from)).abs();
    let limit = match (pk.degree(), q.degree()) {
        (Some(a), Some(b)) if a == b => (pk.lead() / q.lead()).abs(),
        (Some(a), Some(b)) if a > b => {
            return Err(Error::Precondition("remainder decays too slowly".into()));
        }
        _ => Rational::zero(),
    };
    let mut c = if at > limit { at } else { limit };
    c = c * Rational::new(17.into(), 16.into()) + Rational::new(1.into(), num_bigint::BigInt::one() << 64);
    for _ in 0..200 {
        let upper = &q.scale(&c) - &pk;
        let lower = &q.scale(&c) + &pk;
        if upper.nonneg_from(from) && lower.nonneg_from(from) {
            return Ok(c);
        }
        c *= rat_int(2);
    }
    Err(Error::Precondition("could not certify a remainder bound".into()))
}
