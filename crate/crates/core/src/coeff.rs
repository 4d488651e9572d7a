//! Exact scalars: Gaussian rationals and polynomials in the deformation parameter ħ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// An element of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::real(BigRational::from_integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact division by a nonzero Gaussian rational.
    pub fn checked_div(&self, d: &GaussRat) -> Result<GaussRat> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let conj = GaussRat::new(d.re.clone(), -d.im.clone());
        let p = self * &conj;
        Ok(GaussRat::new(p.re / &norm, p.im / norm))
    }

    pub fn div_nat(&self, d: u64) -> Result<GaussRat> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = BigRational::from_integer(BigInt::from(d));
        Ok(GaussRat::new(&self.re / &d, &self.im / &d))
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &GaussRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |r: &BigRational| -> String {
            if r.is_one() {
                "i".to_string()
            } else if (-r).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rat(r))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let im = imag(&self.im);
                if self.im.is_negative() {
                    write!(f, "{}{}", fmt_rat(&self.re), im)
                } else {
                    write!(f, "{}+{}", fmt_rat(&self.re), im)
                }
            }
        }
    }
}

fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn parse_imag(s: &str) -> Option<BigRational> {
    let body = s.strip_suffix('i')?;
    match body {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rat(body),
    }
}

impl FromStr for GaussRat {
    type Err = String;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi` with rational `a`, `b`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || format!("invalid coefficient '{s}'");
        if !s.ends_with('i') {
            return parse_rat(&s).map(GaussRat::real).ok_or_else(bad);
        }
        // split at the last sign that is not leading
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => {
                let re = parse_rat(&s[..k]).ok_or_else(bad)?;
                let im = parse_imag(&s[k..]).ok_or_else(bad)?;
                Ok(GaussRat::new(re, im))
            }
            None => {
                let im = parse_imag(&s).ok_or_else(bad)?;
                Ok(GaussRat::new(BigRational::zero(), im))
            }
        }
    }
}

/// A polynomial in ħ with Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HPoly {
    coeffs: BTreeMap<u32, GaussRat>,
}

impl HPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRat::from_int(n))
    }

    /// `c·ħ^deg`.
    pub fn monomial(c: GaussRat, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        HPoly { coeffs }
    }

    pub fn hbar(deg: u32) -> Self {
        Self::monomial(GaussRat::one(), deg)
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, GaussRat)>>(terms: I) -> Self {
        let mut p = HPoly::zero();
        for (d, c) in terms {
            p.add_term(d, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: u32) -> GaussRat {
        self.coeffs.get(&deg).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &GaussRat)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, deg: u32, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(deg).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn add_assign(&mut self, o: &HPoly) {
        for (d, c) in &o.coeffs {
            self.add_term(*d, c);
        }
    }

    pub fn scale(&self, c: &GaussRat) -> HPoly {
        if c.is_zero() {
            return HPoly::zero();
        }
        HPoly { coeffs: self.coeffs.iter().map(|(d, x)| (*d, x * c)).collect() }
    }

    /// Multiplies by `ħ^k`.
    pub fn shift(&self, k: u32) -> HPoly {
        HPoly { coeffs: self.coeffs.iter().map(|(d, x)| (d + k, x.clone())).collect() }
    }

    /// Substitutes ħ ↦ −ħ.
    pub fn flip_hbar(&self) -> HPoly {
        HPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, x)| (*d, if d % 2 == 1 { -x.clone() } else { x.clone() }))
                .collect(),
        }
    }

    pub fn div_nat(&self, d: u64) -> Result<HPoly> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut out = HPoly::zero();
        for (k, c) in &self.coeffs {
            out.coeffs.insert(*k, c.div_nat(d)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(d, c)| {
                    json!({
                        "hbar_deg": d,
                        "re_num": c.re.numer().to_string(),
                        "re_den": c.re.denom().to_string(),
                        "im_num": c.im.numer().to_string(),
                        "im_den": c.im.denom().to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<HPoly> {
        let bad = || Error::OutOfRange(format!("malformed ħ-polynomial: {v}"));
        let field = |t: &Value, k: &str| -> Result<BigInt> {
            t.get(k).and_then(Value::as_str).and_then(|s| s.parse().ok()).ok_or_else(bad)
        };
        let mut out = HPoly::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let d = t.get("hbar_deg").and_then(Value::as_u64).ok_or_else(bad)? as u32;
            let (rd, id) = (field(t, "re_den")?, field(t, "im_den")?);
            if rd.is_zero() || id.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let c = GaussRat::new(
                BigRational::new(field(t, "re_num")?, rd),
                BigRational::new(field(t, "im_num")?, id),
            );
            out.add_term(d, &c);
        }
        Ok(out)
    }
}

impl<'a> Add<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn add(self, o: &HPoly) -> HPoly {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
}

impl<'a> Sub<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn sub(self, o: &HPoly) -> HPoly {
        let mut out = self.clone();
        out.add_assign(&-o.clone());
        out
    }
}

impl<'a> Mul<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn mul(self, o: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &o.coeffs {
                out.add_term(d1 + d2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly { coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect() }
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                _ if c.re.is_zero() || c.im.is_zero() => format!("{c}·ħ^{d}"),
                _ => format!("({c})·ħ^{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn hp_add(p: &HPoly, q: &HPoly) -> HPoly {
    p + q
}

pub fn hp_mul(p: &HPoly, q: &HPoly) -> HPoly {
    p * q
}

/// Exact division by a positive integer; `d = 0` is rejected.
pub fn hp_div_nat(p: &HPoly, d: u64) -> Result<HPoly> {
    p.div_nat(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        let h = HPoly::hbar(1);
        assert!(hp_add(&h, &-h.clone()).is_zero());
        let s = hp_add(&HPoly::one(), &h);
        assert_eq!(s.coeff(0), GaussRat::one());
        assert_eq!(s.coeff(1), GaussRat::one());
        let p = HPoly::monomial(g("2i"), 2);
        let q = HPoly::monomial(g("3"), 2);
        assert_eq!(hp_add(&p, &q), HPoly::monomial(g("3+2i"), 2));
    }

    #[test]
    fn mul_examples() {
        let h = HPoly::hbar(1);
        assert_eq!(hp_mul(&h, &h), HPoly::hbar(2));
        let m2i = HPoly::constant(g("-2i"));
        assert_eq!(hp_mul(&m2i, &m2i), HPoly::from_int(-4));
        let a = &HPoly::one() + &h;
        let b = &HPoly::one() - &h;
        assert_eq!(hp_mul(&a, &b), &HPoly::one() - &HPoly::hbar(2));
    }

    #[test]
    fn div_examples() {
        let p = HPoly::monomial(GaussRat::from_int(6), 1);
        assert_eq!(hp_div_nat(&p, 3).unwrap(), HPoly::monomial(GaussRat::from_int(2), 1));
        assert!(hp_div_nat(&HPoly::zero(), 5).unwrap().is_zero());
        assert_eq!(hp_div_nat(&HPoly::one(), 2).unwrap(), HPoly::constant(g("1/2")));
        assert_eq!(hp_div_nat(&HPoly::one(), 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_and_parse() {
        for s in ["0", "1", "-1", "1/2", "i", "-i", "-2i", "3+2i", "3-2i", "1/2-3/4i", "-7/3+i"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("4/2").to_string(), "2");
        assert!("1/0".parse::<GaussRat>().is_err());
        assert!("abc".parse::<GaussRat>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = HPoly::from_terms([(0, g("1/2")), (3, g("-2+5/7i"))]);
        assert_eq!(HPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
