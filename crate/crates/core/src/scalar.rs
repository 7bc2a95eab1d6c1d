//! Exact rationals and the scalar-field abstraction.
//!
//! Every algebraic type in the crate is generic over [`Scalar`]. Two fields
//! are provided: [`Rational`] (the default, exact) and `f64` (approximate,
//! compared under an absolute tolerance carried by [`ScalarDomain`]).

use alloc::format;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// A ring with unit. Matrix entries (reals, complex pairs, quaternions) only
/// need this much.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
}

/// A field usable as multivector coefficients.
pub trait Scalar: Ring + PartialOrd + fmt::Display {
    /// `true` for the exact rational field.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Square root. Rationals return [`Error::Inexact`] unless the value is
    /// a perfect square; negative input is an invalid argument for both.
    fn sqrt(&self) -> Result<Self>;
    fn to_f64(&self) -> f64;
    /// Equality up to an absolute tolerance. Exact fields ignore `tol`.
    fn within(&self, other: &Self, tol: f64) -> bool;
    /// Parses the textual form used by the file formats.
    fn parse_scalar(s: &str) -> Result<Self>;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds the canonical fraction `n/d`.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(n, d))
    }

    fn reduce(mut n: BigInt, mut d: BigInt) -> Self {
        debug_assert!(!d.is_zero());
        if n.is_zero() {
            return Self { num: n, den: BigInt::one() };
        }
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if !g.is_one() {
            n /= &g;
            d /= &g;
        }
        Self { num: n, den: d }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self { num: n.into(), den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self { num: self.num.abs(), den: self.den.clone() }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self * &r)
    }

    /// Exact square root: succeeds only when numerator and denominator are
    /// both perfect squares.
    pub fn exact_sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(invalid("square root of a negative rational"));
        }
        let n = self.num.sqrt();
        let d = self.den.sqrt();
        if &n * &n == self.num && &d * &d == self.den {
            // already coprime: gcd(n, d) divides gcd(n², d²) = 1
            Ok(Self { num: n, den: d })
        } else {
            Err(Error::Inexact)
        }
    }

    pub fn to_f64(&self) -> f64 {
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
            _ => {
                // scale both down so the quotient survives the conversion
                let shift = self.num.bits().max(self.den.bits()).saturating_sub(1000);
                let n = (&self.num >> shift).to_f64().unwrap_or(f64::NAN);
                let d = (&self.den >> shift).to_f64().unwrap_or(f64::NAN);
                n / d
            }
        }
    }
}

/// Length ratio |q|/p of a line that holds the measuring stick `q` times
/// against a reference holding it `p` times.
pub fn measure_ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let p = p.into();
    if p < BigInt::one() {
        return Err(invalid("measuring count p must be at least 1"));
    }
    Rational::new(q.into().abs(), p)
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `n` when the denominator is one, otherwise `n/d`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("not a rational: {s:?}")));
            }
            BigInt::from_str(t).map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Self::from_integer(v)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        Rational::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num - &rhs.num, self.den.clone());
        }
        Rational::reduce(&self.num * &rhs.den - &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn sqrt(&self) -> Result<Self> {
        self.exact_sqrt()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn within(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn sqrt(&self) -> Result<Self> {
        if *self < 0.0 {
            return Err(invalid("square root of a negative number"));
        }
        Ok(libm::sqrt(*self))
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn within(&self, other: &Self, tol: f64) -> bool {
        libm::fabs(self - other) <= tol
    }
    fn parse_scalar(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Ok(v) = t.parse::<f64>() {
            return Ok(v);
        }
        // accept the rational form too, so exact inputs feed approximate runs
        t.parse::<Rational>().map(|r| r.to_f64())
    }
}

/// Whether comparisons are exact or tolerance-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Approximate,
}

/// Comparison policy shared by the kinematics and invertibility checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarDomain {
    mode: Mode,
    tolerance: f64,
}

impl ScalarDomain {
    pub const DEFAULT_TOLERANCE: f64 = 1e-12;

    pub const fn exact() -> Self {
        Self { mode: Mode::Exact, tolerance: 0.0 }
    }

    pub fn approximate(tolerance: f64) -> Result<Self> {
        if !(tolerance.is_finite() && tolerance >= 0.0) {
            return Err(invalid(format!("tolerance must be finite and non-negative, got {tolerance}")));
        }
        Ok(Self { mode: Mode::Approximate, tolerance })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn eq<S: Scalar>(&self, a: &S, b: &S) -> bool {
        a.within(b, self.tolerance)
    }

    pub fn is_zero<S: Scalar>(&self, a: &S) -> bool {
        a.within(&S::zero(), self.tolerance)
    }
}

impl Default for ScalarDomain {
    fn default() -> Self {
        Self::exact()
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Approximate => "approximate",
        })
    }
}

/// Shorthand used throughout the tests and the CLI: parses `"n/d"` or `"n"`.
pub fn q(s: &str) -> Rational {
    s.parse().unwrap_or_else(|e: Error| panic!("{}", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_canonicalises() {
        assert_eq!(Rational::new(6, 4).unwrap().to_string(), "3/2");
        assert_eq!(Rational::new(-2, -4).unwrap().to_string(), "1/2");
        let z = Rational::new(0, 7).unwrap();
        assert_eq!(format!("{z:?}"), "0/1");
        assert_eq!(Rational::new(3, 0), Err(Error::ZeroDenominator));
        assert_eq!(Rational::new(3, -6).unwrap(), q("-1/2"));
    }

    #[test]
    fn measure_ratio_examples() {
        assert_eq!(measure_ratio(4, 6).unwrap(), q("3/2"));
        assert_eq!(measure_ratio(5, -5).unwrap(), q("1"));
        assert_eq!(measure_ratio(3, 0).unwrap(), q("0"));
        assert!(matches!(measure_ratio(0, 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn exact_sqrt_examples() {
        assert_eq!(q("25/16").exact_sqrt().unwrap(), q("5/4"));
        assert_eq!(q("2").exact_sqrt(), Err(Error::Inexact));
        assert_eq!(q("0").exact_sqrt().unwrap(), q("0"));
        assert!(matches!(q("-4").exact_sqrt(), Err(Error::InvalidArgument(_))));
        // approximate mode returns a float root instead of signalling
        assert!((Scalar::sqrt(&2.0f64).unwrap() - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("7").to_string(), "7");
        assert_eq!(q(" -3/9 ").to_string(), "-1/3");
        assert_eq!(q("+5/10").to_string(), "1/2");
        for bad in ["", "1/", "/2", "1.5", "a/b", "1//2", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} parsed");
        }
        assert_eq!("1/0".parse::<Rational>(), Err(Error::ZeroDenominator));
    }

    #[test]
    fn ordering_and_float_conversion() {
        assert!(q("1/3") < q("1/2"));
        assert!(q("-1/2") < q("-1/3"));
        assert_eq!(q("3/4").to_f64(), 0.75);
        let huge = Rational::new(BigInt::from(10).pow(400u32), BigInt::from(10).pow(399u32)).unwrap();
        assert_eq!(huge.to_f64(), 10.0);
    }

    #[test]
    fn domain_comparisons() {
        let exact = ScalarDomain::exact();
        assert!(exact.eq(&q("1/2"), &q("2/4")));
        assert!(!exact.is_zero(&1e-300f64));
        let approx = ScalarDomain::approximate(1e-9).unwrap();
        assert!(approx.is_zero(&1e-10f64));
        assert!(!approx.eq(&1.0f64, &1.1f64));
        assert!(ScalarDomain::approximate(-1.0).is_err());
        assert!(ScalarDomain::approximate(f64::NAN).is_err());
    }
}
