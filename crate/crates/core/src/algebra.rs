//! Signatures, basis blades and sparse multivectors of Cl(p,q).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::scalar::{Rational, Scalar};

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 6;

/// Metric descriptor of Cl(p,q): `p` generators square to +1, then `q`
/// generators square to −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > MAX_GENERATORS {
            return Err(Error::UnsupportedSignature(format!(
                "Cl({p},{q}) has {} generators, at most {MAX_GENERATORS} are supported",
                p + q
            )));
        }
        Ok(Self { p: p as u8, q: q as u8 })
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    pub fn n(&self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, 2ⁿ.
    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// Square of generator `i` (0-based declaration order).
    pub fn square(&self, i: usize) -> i8 {
        if i < self.p() {
            1
        } else {
            -1
        }
    }

    pub fn contains(&self, b: Blade) -> bool {
        (b.0 as usize) < self.dim()
    }

    /// All basis blades, grade first then lexicographic.
    pub fn blades(&self) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..self.dim()).map(|m| Blade(m as u8)).collect();
        v.sort();
        v
    }

    pub fn pseudoscalar(&self) -> Blade {
        Blade((self.dim() - 1) as u8)
    }

    pub fn generator(&self, i: usize) -> Result<Blade> {
        if i >= self.n() {
            return Err(invalid(format!("{self} has no generator with index {i}")));
        }
        Ok(Blade(1 << i))
    }

    /// Offset of the first generator's printed index: four-generator algebras
    /// count from `e0` (time first), all others from `e1`.
    fn label_base(&self) -> usize {
        if self.n() == 4 {
            0
        } else {
            1
        }
    }

    pub fn blade_name(&self, b: Blade) -> String {
        if b.is_scalar() {
            return String::from("1");
        }
        let base = self.label_base();
        let mut s = String::from("e");
        for i in b.indices() {
            s.push(char::from_digit((i + base) as u32, 10).unwrap_or('?'));
        }
        s
    }

    /// Parses a blade name, allowing generators in any order (`e31`) and
    /// returning the reordering sign together with the canonical blade.
    pub fn parse_blade(&self, name: &str) -> Result<(Blade, i8)> {
        let name = name.trim();
        if name == "1" {
            return Ok((Blade::SCALAR, 1));
        }
        let digits = name
            .strip_prefix('e')
            .filter(|d| !d.is_empty())
            .ok_or_else(|| Error::Parse(format!("not a blade name: {name:?}")))?;
        let base = self.label_base();
        let mut bits = 0u8;
        let mut order = Vec::new();
        for c in digits.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("not a blade name: {name:?}")))?
                as usize;
            if d < base || d - base >= self.n() {
                return Err(Error::Parse(format!("{name:?} names a generator outside {self}")));
            }
            let i = d - base;
            if bits & (1 << i) != 0 {
                return Err(Error::Parse(format!("{name:?} repeats a generator")));
            }
            bits |= 1 << i;
            order.push(i);
        }
        let mut inversions = 0;
        for a in 0..order.len() {
            for b in a + 1..order.len() {
                if order[a] > order[b] {
                    inversions += 1;
                }
            }
        }
        Ok((Blade(bits), if inversions % 2 == 0 { 1 } else { -1 }))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a signature like Cl(1,3), got {s:?}"));
        let inner = s
            .trim()
            .strip_prefix("Cl(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        let p: usize = p.trim().parse().map_err(|_| bad())?;
        let q: usize = q.trim().parse().map_err(|_| bad())?;
        Signature::new(p, q)
    }
}

/// Basis blade as a bitset of generator indices. Ordered by grade, then
/// lexicographically by the ascending index list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u8) -> Self {
        Blade(bits)
    }

    pub fn bits(&self) -> u8 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..8).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Sign picked up when the blade is reversed: (−1)^(k(k−1)/2).
    pub fn reverse_sign(&self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the lowest differing generator belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn blade_product_unchecked(sig: Signature, a: Blade, b: Blade) -> (Blade, i8) {
    let mut swaps = 0u32;
    let mut x = a.0 >> 1;
    while x != 0 {
        swaps += (x & b.0).count_ones();
        x >>= 1;
    }
    let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
    let common = a.0 & b.0;
    for i in 0..sig.n() {
        if common & (1 << i) != 0 {
            sign *= sig.square(i);
        }
    }
    (Blade(a.0 ^ b.0), sign)
}

/// Product of two basis blades: the canonical result blade and its sign.
pub fn blade_product(sig: Signature, a: Blade, b: Blade) -> Result<(Blade, i8)> {
    for blade in [a, b] {
        if !sig.contains(blade) {
            return Err(Error::BladeOutOfRange { blade, signature: sig });
        }
    }
    Ok(blade_product_unchecked(sig, a, b))
}

/// A sparse multivector: each blade stored at most once, never with a zero
/// coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<S = Rational> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Self { sig, terms: BTreeMap::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn scalar(sig: Signature, s: S) -> Self {
        Self::zero(sig).with_term(Blade::SCALAR, s)
    }

    /// `coef · blade`.
    pub fn blade(sig: Signature, blade: Blade, coef: S) -> Result<Self> {
        if !sig.contains(blade) {
            return Err(Error::BladeOutOfRange { blade, signature: sig });
        }
        Ok(Self::zero(sig).with_term(blade, coef))
    }

    /// Generator `i` with unit coefficient.
    pub fn basis(sig: Signature, i: usize) -> Result<Self> {
        Self::blade(sig, sig.generator(i)?, S::one())
    }

    /// Σ coords[i]·e_i; the slice length must equal n.
    pub fn vector(sig: Signature, coords: &[S]) -> Result<Self> {
        if coords.len() != sig.n() {
            return Err(invalid(format!(
                "{sig} vectors have {} components, got {}",
                sig.n(),
                coords.len()
            )));
        }
        let mut mv = Self::zero(sig);
        for (i, c) in coords.iter().enumerate() {
            mv.add_term(Blade(1 << i), c.clone());
        }
        Ok(mv)
    }

    /// Sums the given terms, merging repeated blades.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, S)>) -> Result<Self> {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            if !sig.contains(b) {
                return Err(Error::BladeOutOfRange { blade: b, signature: sig });
            }
            mv.add_term(b, c);
        }
        Ok(mv)
    }

    fn with_term(mut self, b: Blade, c: S) -> Self {
        self.add_term(b, c);
        self
    }

    fn add_term(&mut self, b: Blade, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&b) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(b, sum);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Nonzero terms in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: Blade) -> S {
        self.terms.get(&b).cloned().unwrap_or_else(S::zero)
    }

    pub fn scalar_part(&self) -> S {
        self.coefficient(Blade::SCALAR)
    }

    /// `Some(s)` when the multivector is the pure scalar `s` (including 0).
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    pub fn grade_part(&self, k: usize) -> Self {
        Self {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// True when every term has grade `k` (the zero multivector qualifies).
    pub fn is_grade(&self, k: usize) -> bool {
        self.terms.keys().all(|b| b.grade() == k)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// The geometric product, expanded term by term.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (blade, sign) = blade_product_unchecked(self.sig, *a, *b);
                let c = ca.clone() * cb.clone();
                out.add_term(blade, if sign < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.sig);
        }
        Self {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter_map(|(b, c)| {
                    let v = c.clone() * s.clone();
                    (!v.is_zero()).then_some((*b, v))
                })
                .collect(),
        }
    }

    /// Reverses the generator order of every blade.
    pub fn reverse(&self) -> Self {
        Self {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.reverse_sign() < 0 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// Right multiplication by the pseudoscalar.
    pub fn dual(&self) -> Self {
        let ps = Self::zero(self.sig).with_term(self.sig.pseudoscalar(), S::one());
        self * &ps
    }

    /// `A Ã`, the scalar for versors and vectors.
    pub fn norm_sq(&self) -> Self {
        self * &self.reverse()
    }

    fn require_vectors(&self, other: &Self, op: &str) -> Result<()> {
        self.check_same(other)?;
        if !self.is_grade(1) || !other.is_grade(1) {
            return Err(invalid(format!("{op} is defined for vectors only")));
        }
        Ok(())
    }

    /// Symmetric part ½(ab + ba) of two vectors.
    pub fn dot(&self, other: &Self) -> Result<Self> {
        self.require_vectors(other, "dot")?;
        let sym = (self * other) + (other * self);
        Ok(sym.scale(&half()))
    }

    /// Antisymmetric part ½(ab − ba) of two vectors.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.require_vectors(other, "wedge")?;
        let anti = (self * other) - (other * self);
        Ok(anti.scale(&half()))
    }

    /// Coordinates of a vector in generator order.
    pub fn vector_coords(&self) -> Result<Vec<S>> {
        if !self.is_grade(1) {
            return Err(invalid("expected a vector (grade-1 multivector)"));
        }
        Ok((0..self.sig.n()).map(|i| self.coefficient(Blade(1 << i))).collect())
    }

    /// Multiplicative inverse when the element is a nonzero scalar multiple
    /// of its own reverse-norm (vectors, versors, blades).
    pub fn versor_inverse(&self) -> Option<Self> {
        let n = self.norm_sq().as_scalar()?;
        let inv = n.inv()?;
        Some(self.reverse().scale(&inv))
    }

    /// Sum of squared coefficients, independent of the metric.
    pub fn coefficient_norm_sq(&self) -> S {
        self.terms.values().fold(S::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub fn to_f64(&self) -> Multivector<f64> {
        self.map(|c| c.to_f64())
    }

    /// Coefficient-wise comparison under an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.sig != other.sig {
            return false;
        }
        self.terms.keys().chain(other.terms.keys()).all(|b| {
            self.coefficient(*b).within(&other.coefficient(*b), tol)
        })
    }

    /// Parses the text form `coef*blade + coef*blade + …`. A bare blade means
    /// coefficient 1, a bare coefficient means a scalar term, `-e12` negates.
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse(String::from("empty multivector")));
        }
        let mut mv = Self::zero(sig);
        for raw in text.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            let (coef, blade) = match term.split_once('*') {
                Some((c, b)) => (S::parse_scalar(c)?, b.trim()),
                None if term.trim_start_matches('-').starts_with('e') => {
                    match term.strip_prefix('-') {
                        Some(b) => (-S::one(), b),
                        None => (S::one(), term),
                    }
                }
                None => (S::parse_scalar(term)?, "1"),
            };
            let (b, sign) = sig.parse_blade(blade)?;
            mv.add_term(b, if sign < 0 { -coef } else { coef });
        }
        Ok(mv)
    }
}

fn half<S: Scalar>() -> S {
    S::from_rational(&Rational::new(1, 2).expect("nonzero denominator"))
}

/// Text form in canonical blade order, e.g. `1 + -3/2*e12`; zero prints `0`.
impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if b.is_scalar() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", self.sig.blade_name(*b))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// # Panics
        /// On signature mismatch; use the `try_`/`product` methods to get a
        /// `Result` instead.
        impl<S: Scalar> $tr<&Multivector<S>> for &Multivector<S> {
            type Output = Multivector<S>;
            fn $m(self, rhs: &Multivector<S>) -> Multivector<S> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<S: Scalar> $tr for Multivector<S> {
            type Output = Multivector<S>;
            fn $m(self, rhs: Multivector<S>) -> Multivector<S> {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, product);

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

/// One cell of a Cayley table: `sign · blade`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedBlade {
    pub sign: i8,
    pub blade: Blade,
}

/// Full product table over the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    signature: Signature,
    blades: Vec<Blade>,
    cells: Vec<SignedBlade>,
}

impl CayleyTable {
    pub fn new(sig: Signature) -> Self {
        let blades = sig.blades();
        let mut cells = Vec::with_capacity(blades.len() * blades.len());
        for a in &blades {
            for b in &blades {
                let (blade, sign) = blade_product_unchecked(sig, *a, *b);
                cells.push(SignedBlade { sign, blade });
            }
        }
        Self { signature: sig, blades, cells }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// Row and column headers.
    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn get(&self, row: usize, col: usize) -> SignedBlade {
        self.cells[row * self.blades.len() + col]
    }

    /// Cell text such as `-e12` or `1`.
    pub fn cell_name(&self, row: usize, col: usize) -> String {
        let c = self.get(row, col);
        let name = self.signature.blade_name(c.blade);
        if c.sign < 0 {
            format!("-{name}")
        } else {
            name
        }
    }
}

/// Number of basis blades squaring to +1 and to −1.
pub fn square_census(sig: Signature) -> (usize, usize) {
    let plus = sig
        .blades()
        .into_iter()
        .filter(|b| blade_product_unchecked(sig, *b, *b).1 > 0)
        .count();
    (plus, sig.dim() - plus)
}

/// Named element of the algebra: `sign · blade`, e.g. `j = −e13` in 3D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alias {
    pub name: &'static str,
    pub sign: i8,
    pub blade: Blade,
}

const ALIASES_2D: [Alias; 3] = [
    Alias { name: "x", sign: 1, blade: Blade(0b01) },
    Alias { name: "y", sign: 1, blade: Blade(0b10) },
    Alias { name: "k", sign: 1, blade: Blade(0b11) },
];

const ALIASES_3D: [Alias; 7] = [
    Alias { name: "x", sign: 1, blade: Blade(0b001) },
    Alias { name: "y", sign: 1, blade: Blade(0b010) },
    Alias { name: "z", sign: 1, blade: Blade(0b100) },
    Alias { name: "i", sign: 1, blade: Blade(0b110) },
    Alias { name: "j", sign: -1, blade: Blade(0b101) },
    Alias { name: "k", sign: 1, blade: Blade(0b011) },
    Alias { name: "v", sign: 1, blade: Blade(0b111) },
];

const ALIASES_4D: [Alias; 4] = [
    Alias { name: "t", sign: 1, blade: Blade(0b0001) },
    Alias { name: "x", sign: 1, blade: Blade(0b0010) },
    Alias { name: "y", sign: 1, blade: Blade(0b0100) },
    Alias { name: "z", sign: 1, blade: Blade(0b1000) },
];

/// Letter names for the non-scalar elements of the 2D, 3D and 4D algebras.
pub fn aliases(sig: Signature) -> &'static [Alias] {
    match sig.n() {
        2 => &ALIASES_2D,
        3 => &ALIASES_3D,
        4 => &ALIASES_4D,
        _ => &[],
    }
}

/// Looks up an alias by letter, returning it as a multivector.
pub fn alias<S: Scalar>(sig: Signature, name: &str) -> Result<Multivector<S>> {
    let a = aliases(sig)
        .iter()
        .find(|a| a.name == name)
        .ok_or_else(|| invalid(format!("{sig} has no element named {name:?}")))?;
    Multivector::blade(sig, a.blade, S::from_i64(a.sign as i64))
}

/// One member of a quaternionic triad: an alias, possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriadElement {
    pub alias: Alias,
    pub negated: bool,
}

impl TriadElement {
    /// Overall sign relative to the canonical blade.
    pub fn sign(&self) -> i8 {
        if self.negated {
            -self.alias.sign
        } else {
            self.alias.sign
        }
    }

    pub fn to_multivector<S: Scalar>(&self, sig: Signature) -> Multivector<S> {
        Multivector::zero(sig).with_term(self.alias.blade, S::from_i64(self.sign() as i64))
    }
}

impl fmt::Display for TriadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        f.write_str(self.alias.name)
    }
}

// Cyclic order x→y→z→x on vectors and i→j→k→i on bivectors.
fn cycle_successor(name: &str) -> Option<&'static str> {
    Some(match name {
        "x" => "y",
        "y" => "z",
        "z" => "x",
        "i" => "j",
        "j" => "k",
        "k" => "i",
        _ => return None,
    })
}

/// Ordered triples (u, v, w) of named 3D elements with
/// u² = v² = w² = uvw = −1 that respect the cyclic order of the axes and of
/// the coordinate planes. Each cyclic rotation is reported once, rotated so
/// that the element latest in the alias table comes last.
pub fn quaternion_triads(sig: Signature) -> Result<Vec<[TriadElement; 3]>> {
    if sig.n() != 3 {
        return Err(invalid(format!("quaternionic triads are defined for three generators, got {sig}")));
    }
    let table = aliases(sig);
    let minus_one = Multivector::<Rational>::scalar(sig, Rational::from(-1));
    let mut found = Vec::new();
    for negated in [false, true] {
        let elems: Vec<TriadElement> =
            table.iter().map(|&alias| TriadElement { alias, negated }).collect();
        for (iu, u) in elems.iter().enumerate() {
            for (iv, v) in elems.iter().enumerate() {
                for (iw, w) in elems.iter().enumerate() {
                    if iu == iv || iv == iw || iu == iw {
                        continue;
                    }
                    // the rotated representative only
                    if iw < iu || iw < iv {
                        continue;
                    }
                    let triple = [*u, *v, *w];
                    let mvs = triple.map(|e| e.to_multivector::<Rational>(sig));
                    if mvs.iter().any(|m| m * m != minus_one) {
                        continue;
                    }
                    if &(&mvs[0] * &mvs[1]) * &mvs[2] != minus_one {
                        continue;
                    }
                    let cyclic = (0..3).all(|k| {
                        let a = triple[k].alias;
                        let b = triple[(k + 1) % 3].alias;
                        a.blade.grade() != b.blade.grade() || cycle_successor(a.name) == Some(b.name)
                    });
                    if cyclic {
                        found.push(triple);
                    }
                }
            }
        }
    }
    Ok(found)
}
