//! Quaternions and complex numbers over a [`Scalar`] field.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Ring, Scalar};

/// `w + x i + y j + z k` with `i² = j² = k² = ijk = −1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quaternion<S = Rational> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Self { w, x, y, z }
    }

    pub fn real(w: S) -> Self {
        Self::new(w, S::zero(), S::zero(), S::zero())
    }

    /// `x i + y j + z k`.
    pub fn pure(x: S, y: S, z: S) -> Self {
        Self::new(S::zero(), x, y, z)
    }

    pub fn i() -> Self {
        Self::pure(S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Self::pure(S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Self::pure(S::zero(), S::zero(), S::one())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// `w² + x² + y² + z²`.
    pub fn norm_sq(&self) -> S {
        [&self.w, &self.x, &self.y, &self.z]
            .iter()
            .fold(S::zero(), |acc, c| acc + (*c).clone() * (*c).clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq().inv()?;
        Some(self.conjugate().scale(&n))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.w.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    pub fn components(&self) -> [S; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.components().iter().zip(other.components().iter()).all(|(a, b)| a.within(b, tol))
    }

    /// Parses `w+xi+yj+zk`; absent parts are zero and each unit may appear
    /// at most once.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts: [Option<S>; 4] = [None, None, None, None];
        for (coef, unit) in split_signed_terms(text)? {
            let slot = match unit {
                None => 0,
                Some('i') => 1,
                Some('j') => 2,
                Some('k') => 3,
                Some(u) => return Err(Error::Parse(format!("unknown quaternion unit {u:?} in {text:?}"))),
            };
            if parts[slot].is_some() {
                return Err(Error::Parse(format!("repeated component in {text:?}")));
            }
            parts[slot] = Some(S::parse_scalar(&coef)?);
        }
        let [w, x, y, z] = parts.map(|p| p.unwrap_or_else(S::zero));
        Ok(Self::new(w, x, y, z))
    }
}

/// Splits `a+bi-cj` style text into signed coefficients and unit letters.
fn split_signed_terms(text: &str) -> Result<Vec<(String, Option<char>)>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty number {text:?}")));
    }
    let bytes = t.as_bytes();
    let mut starts = Vec::from([0]);
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E' | b'/') {
            starts.push(i);
        }
    }
    starts.push(bytes.len());
    let mut out = Vec::new();
    for w in starts.windows(2) {
        let mut term = &t[w[0]..w[1]];
        let mut unit = None;
        if let Some(last) = term.chars().last() {
            if matches!(last, 'i' | 'j' | 'k') {
                unit = Some(last);
                term = &term[..term.len() - 1];
            }
        }
        let coef = match term {
            "" | "+" => String::from("1"),
            "-" => String::from("-1"),
            _ => String::from(term.strip_prefix('+').unwrap_or(term)),
        };
        out.push((coef, unit));
    }
    Ok(out)
}

fn write_signed<S: Scalar>(f: &mut fmt::Formatter<'_>, c: &S, unit: &str) -> fmt::Result {
    if c.is_negative() {
        write!(f, "-{}{unit}", c.abs())
    } else {
        write!(f, "+{c}{unit}")
    }
}

/// `w+xi+yj+zk`, all four parts always printed.
impl<S: Scalar> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)?;
        write_signed(f, &self.x, "i")?;
        write_signed(f, &self.y, "j")?;
        write_signed(f, &self.z, "k")
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (&self, &o);
        let m = |p: &S, q: &S| p.clone() * q.clone();
        Self::new(
            m(&a.w, &b.w) - m(&a.x, &b.x) - m(&a.y, &b.y) - m(&a.z, &b.z),
            m(&a.w, &b.x) + m(&a.x, &b.w) + m(&a.y, &b.z) - m(&a.z, &b.y),
            m(&a.w, &b.y) - m(&a.x, &b.z) + m(&a.y, &b.w) + m(&a.z, &b.x),
            m(&a.w, &b.z) + m(&a.x, &b.y) - m(&a.y, &b.x) + m(&a.z, &b.w),
        )
    }
}

impl<S: Scalar> Ring for Quaternion<S> {
    fn zero() -> Self {
        Self::real(S::zero())
    }
    fn one() -> Self {
        Self::real(S::one())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

/// `re + im·i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex<S = Rational> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> Complex<S> {
    pub fn new(re: S, im: S) -> Self {
        Self { re, im }
    }

    pub fn real(re: S) -> Self {
        Self::new(re, S::zero())
    }

    pub fn i() -> Self {
        Self::new(S::zero(), S::one())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> S {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.re.clone() * s.clone(), self.im.clone() * s.clone())
    }

    /// Parses `a+bi`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts: [Option<S>; 2] = [None, None];
        for (coef, unit) in split_signed_terms(text)? {
            let slot = match unit {
                None => 0,
                Some('i') => 1,
                Some(u) => return Err(Error::Parse(format!("unknown complex unit {u:?} in {text:?}"))),
            };
            if parts[slot].is_some() {
                return Err(Error::Parse(format!("repeated component in {text:?}")));
            }
            parts[slot] = Some(S::parse_scalar(&coef)?);
        }
        let [re, im] = parts.map(|p| p.unwrap_or_else(S::zero));
        Ok(Self::new(re, im))
    }
}

/// `a+bi`, both parts always printed.
impl<S: Scalar> fmt::Display for Complex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        write_signed(f, &self.im, "i")
    }
}

impl<S: Scalar> Add for Complex<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl<S: Scalar> Sub for Complex<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl<S: Scalar> Neg for Complex<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<S: Scalar> Mul for Complex<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            self.re * o.im + self.im * o.re,
        )
    }
}

impl<S: Scalar> Ring for Complex<S> {
    fn zero() -> Self {
        Self::real(S::zero())
    }
    fn one() -> Self {
        Self::real(S::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use alloc::string::ToString;

    type Q = Quaternion<Rational>;

    fn quat(w: i64, x: i64, y: i64, z: i64) -> Q {
        Q::new(w.into(), x.into(), y.into(), z.into())
    }

    #[test]
    fn hamilton_rules() {
        assert_eq!(Q::i() * Q::j(), Q::k());
        assert_eq!(Q::j() * Q::i(), -Q::k());
        assert_eq!(Q::j() * Q::k(), Q::i());
        assert_eq!(Q::k() * Q::i(), Q::j());
        for u in [Q::i(), Q::j(), Q::k()] {
            assert_eq!(u.clone() * u, -Q::one());
        }
        assert_eq!(Q::i() * Q::j() * Q::k(), -Q::one());
    }

    #[test]
    fn norm_and_inverse() {
        let p = quat(1, 2, 3, 4);
        assert_eq!(p.clone() * p.conjugate(), Q::real(q("30")));
        assert_eq!(p.norm_sq(), q("30"));
        assert_eq!(Q::zero().norm_sq(), q("0"));
        assert_eq!(Q::i().norm_sq(), q("1"));
        assert_eq!(p.clone() * p.inverse().unwrap(), Q::one());
        assert!(Q::zero().inverse().is_none());
    }

    #[test]
    fn text_forms() {
        let p = Q::new(q("1/2"), q("-3"), q("0"), q("7/5"));
        assert_eq!(p.to_string(), "1/2-3i+0j+7/5k");
        assert_eq!(Q::parse(&p.to_string()).unwrap(), p);
        assert_eq!(Q::parse("-k").unwrap(), -Q::k());
        assert_eq!(Q::parse("2 + j").unwrap(), quat(2, 0, 1, 0));
        assert!(Q::parse("1+2q").is_err());
        assert!(Q::parse("i+i").is_err());
        let c = Complex::new(q("-1/3"), q("-2"));
        assert_eq!(c.to_string(), "-1/3-2i");
        assert_eq!(Complex::parse(&c.to_string()).unwrap(), c);
        assert!(Complex::<Rational>::parse("1+j").is_err());
    }

    #[test]
    fn complex_arithmetic() {
        let i = Complex::<Rational>::i();
        assert_eq!(i.clone() * i, -Complex::one());
        let z = Complex::new(q("3"), q("4"));
        assert_eq!(z.clone() * z.conjugate(), Complex::real(q("25")));
    }
}
