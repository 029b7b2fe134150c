//! Exact coefficients: rationals with unbounded integers and univariate
//! rational functions in the formal parameter `t`.
//!
//! Every coefficient in the crate is a [`RatFun`]. Numeric parameters are
//! constant rational functions, so a symbolic computation and a numeric one
//! run through the same code path.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Exact rational number with a positive, coprime denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Dense polynomial in `t` over the rationals, coefficients ascending.
/// The last coefficient, if any, is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Scales so the leading coefficient is 1; returns the factor removed.
    pub fn make_monic(&self) -> (Poly, Rational) {
        match self.leading() {
            None => (Poly::zero(), Rational::one()),
            Some(lc) if lc.is_one() => (self.clone(), Rational::one()),
            Some(lc) => {
                let inv = lc.recip();
                (self.scale(&inv), lc.clone())
            }
        }
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::one();
            }
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic().0
    }

    /// Exact quotient; panics in debug builds when the division leaves a
    /// remainder.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Lcm of coefficient denominators, times gcd-free integer content.
    /// Returns the primitive integer-coefficient associate and the factor
    /// such that `self = factor * primitive`.
    pub fn primitive_part(&self) -> (Poly, Rational) {
        if self.is_zero() {
            return (Poly::zero(), Rational::one());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for i in &ints {
            g = num_integer::gcd(g, i.clone());
        }
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        let prim = Poly {
            coeffs: ints
                .into_iter()
                .map(|i| Rational::from_integer(i / &g))
                .collect(),
        };
        (prim, Rational::new(g, den_lcm))
    }

    fn add_ref(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Poly::from_coeffs(out)
    }

    fn neg_ref(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul_ref(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.coeffs.len() == 1 {
            return self.scale(&o.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return o.scale(&self.coeffs[0]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.add_ref(o)
    }
}
impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.add_ref(&o.neg_ref())
    }
}
impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.mul_ref(o)
    }
}
impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = format_rational(&a);
            match (i, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{coef}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{coef}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Element of Q(t) in canonical form: reduced, monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn t() -> Self {
        RatFun {
            num: Poly::t(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(q: Rational) -> Self {
        RatFun {
            num: Poly::constant(q),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs[0].recip();
            return RatFun {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let (den, lc) = den.make_monic();
        let num = num.scale(&lc.recip());
        RatFun { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(q)` when the function is the constant `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.coeffs.len() <= 1
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFun) -> Result<Self, Error> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at `t = t0`.
    pub fn specialize(&self, t0: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::Pole {
                at: format_rational(t0),
                denominator: self.den.to_string(),
            });
        }
        Ok(self.num.eval(t0) / d)
    }

    /// Substitutes a rational function for `t`.
    pub fn compose(&self, x: &RatFun) -> Result<Self, Error> {
        let eval = |p: &Poly| {
            let mut acc = RatFun::zero();
            for c in p.coeffs.iter().rev() {
                acc = &(&acc * x) + &RatFun::from_rational(c.clone());
            }
            acc
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }

    pub fn to_json(&self) -> RatFunJson {
        RatFunJson {
            num: self.num.coeffs.iter().map(format_rational).collect(),
            den: self.den.coeffs.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &RatFunJson) -> Result<Self, Error> {
        let parse = |v: &[String]| -> Result<Poly, Error> {
            Ok(Poly::from_coeffs(
                v.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<_, _>>()?,
            ))
        };
        RatFun::new(parse(&j.num)?, parse(&j.den)?)
    }

    fn add_ref(&self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            if self.den.is_one() {
                return RatFun::from_poly(num);
            }
            return Self::canonical(num, self.den.clone());
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::canonical(num, &self.den * &o.den)
    }

    fn mul_ref(&self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() && (self.num.coeffs.len() == 1 || o.num.coeffs.len() == 1) {
            return RatFun::from_poly(&self.num * &o.num);
        }
        // cross-cancel before multiplying
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let num = &self.num.exact_div(&g1) * &o.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &o.den.exact_div(&g1);
        let (den, lc) = den.make_monic();
        RatFun {
            num: num.scale(&lc.recip()),
            den,
        }
    }
}

/// JSON shape: coefficients ascending in `t`, each a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl Serialize for RatFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RatFunJson::deserialize(d)?;
        RatFun::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        RatFun::from_int(n)
    }
}

impl From<Rational> for RatFun {
    fn from(q: Rational) -> Self {
        RatFun::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, o: &RatFun) -> RatFun {
                $body(self, o)
            }
        }
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                $body(&self, &o)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: &RatFun) -> RatFun {
                $body(&self, o)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                $body(self, &o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFun, b: &RatFun| a.add_ref(b));
forward_binop!(Sub, sub, |a: &RatFun, b: &RatFun| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &RatFun, b: &RatFun| a.mul_ref(b));
// Panics on a zero divisor; use `checked_div` where that is reachable.
forward_binop!(Div, div, |a: &RatFun, b: &RatFun| a
    .checked_div(b)
    .expect("division by zero rational function"));

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, o: &RatFun) {
        *self = self.add_ref(o);
    }
}

impl SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, o: &RatFun) {
        *self = self.add_ref(&-o);
    }
}

impl MulAssign<&RatFun> for RatFun {
    fn mul_assign(&mut self, o: &RatFun) {
        *self = self.mul_ref(o);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> RatFun {
        RatFun::t()
    }

    fn c(n: i64) -> RatFun {
        RatFun::from_int(n)
    }

    fn central_charge() -> RatFun {
        c(3) * (t() - c(2)) / t()
    }

    #[test]
    fn quotient_of_polynomials() {
        let q = (t() - c(2)) / t();
        assert_eq!(q, central_charge() / c(3));
        assert_eq!(q.to_string(), "(t - 2)/t");
    }

    #[test]
    fn self_subtraction_is_zero() {
        let a = central_charge() / (t() + c(1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn three_over_three_minus_c() {
        let v = c(3) / (c(3) - central_charge());
        assert_eq!(v, t() / c(2));
        // sampled cross-check at rational points
        for t0 in [rat(1, 3), rat(5, 2), rat(-7, 4), rat(11, 1), rat(3, 13)] {
            let cc = rat(3, 1) * (&t0 - rat(2, 1)) / &t0;
            let lhs = rat(3, 1) / (rat(3, 1) - cc);
            assert_eq!(v.specialize(&t0).unwrap(), lhs);
        }
    }

    #[test]
    fn specialize_values() {
        let f = c(2) / t();
        assert_eq!(f.specialize(&rat(1, 2)).unwrap(), rat(4, 1));
        // h^-(1,1,t) = 2/t - 1 vanishes at t = 2
        let hm = c(2) / t() - c(1);
        assert!(hm.specialize(&rat(2, 1)).unwrap().is_zero());
        let pole = c(1) / (t() - c(2));
        match pole.specialize(&rat(2, 1)) {
            Err(Error::Pole { denominator, .. }) => assert_eq!(denominator, "t - 2"),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(t().checked_div(&RatFun::zero()), Err(Error::DivisionByZero)));
        assert!(RatFun::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = (t() * t() - RatFun::from_rational(rat(1, 2))) / (c(3) * t() + c(1));
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"num":["-1/6","0","1/3"],"den":["1/3","1"]}"#);
        let back: RatFun = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = c(1) / (c(2) * t() - c(4));
        assert_eq!(f.denom().leading(), Some(&Rational::one()));
        assert_eq!(f.numer().constant_value(), Some(rat(1, 2)));
    }

    #[test]
    fn compose_substitutes() {
        let f = (t() + c(1)) / t();
        let g = f.compose(&(t() * t())).unwrap();
        assert_eq!(g, (t() * t() + c(1)) / (t() * t()));
    }
}
