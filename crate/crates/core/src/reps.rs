//! Matrix representations of the low-dimensional Clifford algebras.
//!
//! Each catalogue entry fixes generator images; every other basis blade is
//! the ordered product of its generators. Nothing about the images is
//! trusted: [`Representation::verify_homomorphism`] checks the product
//! table blade by blade.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;
use core::str::FromStr;

use crate::algebra::{blade_product, square_census, Blade, Multivector, Signature};
use crate::error::{invalid, Error, Result};
use crate::quaternion::{Complex, Quaternion};
use crate::scalar::{Rational, Ring, Scalar, ScalarDomain};

/// Matrix entry type: the scalar field itself, complex pairs or quaternions.
pub trait Entry<S: Scalar>: Ring + fmt::Display {
    /// Number of real components per entry.
    const COMPONENTS: usize;

    fn from_scalar(s: S) -> Self;
    fn scale_by(&self, s: &S) -> Self;
    fn components(&self) -> Vec<S>;
    fn parse_entry(text: &str) -> Result<Self>;
}

macro_rules! scalar_entry {
    ($t:ty) => {
        impl Entry<$t> for $t {
            const COMPONENTS: usize = 1;
            fn from_scalar(s: $t) -> Self {
                s
            }
            fn scale_by(&self, s: &$t) -> Self {
                self.clone() * s.clone()
            }
            fn components(&self) -> Vec<$t> {
                vec![self.clone()]
            }
            fn parse_entry(text: &str) -> Result<Self> {
                <$t as Scalar>::parse_scalar(text)
            }
        }
    };
}

scalar_entry!(Rational);
scalar_entry!(f64);

impl<S: Scalar> Entry<S> for Complex<S> {
    const COMPONENTS: usize = 2;
    fn from_scalar(s: S) -> Self {
        Complex::real(s)
    }
    fn scale_by(&self, s: &S) -> Self {
        self.scale(s)
    }
    fn components(&self) -> Vec<S> {
        vec![self.re.clone(), self.im.clone()]
    }
    fn parse_entry(text: &str) -> Result<Self> {
        Complex::parse(text)
    }
}

impl<S: Scalar> Entry<S> for Quaternion<S> {
    const COMPONENTS: usize = 4;
    fn from_scalar(s: S) -> Self {
        Quaternion::real(s)
    }
    fn scale_by(&self, s: &S) -> Self {
        self.scale(s)
    }
    fn components(&self) -> Vec<S> {
        self.components().to_vec()
    }
    fn parse_entry(text: &str) -> Result<Self> {
        Quaternion::parse(text)
    }
}

/// Dense row-major matrix over a ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(invalid(format!(
                "a {rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(invalid("matrix rows differ in length"));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = R::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k).clone() * other.get(k, c).clone();
                }
                data.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(invalid("matrix shapes differ"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e.clone())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Text of every entry, row by row.
    pub fn to_text(&self) -> Vec<Vec<String>>
    where
        R: fmt::Display,
    {
        (0..self.rows).map(|r| self.row(r).iter().map(|e| e.to_string()).collect()).collect()
    }
}

/// Ring and size of a representation's matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Real(usize),
    Complex(usize),
    Quaternion(usize),
}

impl Target {
    pub fn dim(&self) -> usize {
        match *self {
            Target::Real(n) | Target::Complex(n) | Target::Quaternion(n) => n,
        }
    }
}

/// `real-4`, `complex-2`, `quaternion-1`, ...
impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Real(n) => write!(f, "real-{n}"),
            Target::Complex(n) => write!(f, "complex-{n}"),
            Target::Quaternion(n) => write!(f, "quaternion-{n}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a target like real-4 or quaternion-2, got {s:?}"));
        let (ring, n) = s.trim().split_once('-').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        if n == 0 || n > 8 {
            return Err(bad());
        }
        match ring {
            "real" => Ok(Target::Real(n)),
            "complex" => Ok(Target::Complex(n)),
            "quaternion" => Ok(Target::Quaternion(n)),
            _ => Err(bad()),
        }
    }
}

/// Images of every basis blade, indexed by blade bits.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<S, R> {
    signature: Signature,
    target: Target,
    images: Vec<Matrix<R>>,
    _field: PhantomData<S>,
}

/// A pair of blades whose image product disagrees with the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub left: Blade,
    pub right: Blade,
}

/// Outcome of checking a representation against the product table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub signature: Signature,
    pub target: Target,
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
    pub identity_ok: bool,
    /// Blades squaring to +1 and −1 in the algebra.
    pub census_expected: (usize, usize),
    /// Images squaring to +I, to −I, and to anything else.
    pub census_observed: (usize, usize, usize),
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.identity_ok
            && self.census_observed == (self.census_expected.0, self.census_expected.1, 0)
    }
}

impl<S: Scalar, R: Entry<S>> Representation<S, R> {
    /// Extends generator images multiplicatively to all blades.
    pub fn from_generators(sig: Signature, target: Target, generators: Vec<Matrix<R>>) -> Result<Self> {
        if generators.len() != sig.n() {
            return Err(invalid(format!(
                "{sig} needs {} generator images, got {}",
                sig.n(),
                generators.len()
            )));
        }
        let d = target.dim();
        if generators.iter().any(|g| g.rows() != d || g.cols() != d) {
            return Err(invalid(format!("generator images must be {d}x{d}")));
        }
        let mut images = Vec::with_capacity(sig.dim());
        for bits in 0..sig.dim() {
            let blade = Blade::from_bits(bits as u8);
            let mut m = Matrix::identity(d);
            for i in blade.indices() {
                m = m.mul(&generators[i])?;
            }
            images.push(m);
        }
        Ok(Self { signature: sig, target, images, _field: PhantomData })
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn image(&self, b: Blade) -> Result<&Matrix<R>> {
        self.images
            .get(b.bits() as usize)
            .ok_or(Error::BladeOutOfRange { blade: b, signature: self.signature })
    }

    /// Replaces one blade's image, e.g. to build a negative control.
    pub fn with_image(mut self, b: Blade, m: Matrix<R>) -> Result<Self> {
        let d = self.target.dim();
        if m.rows() != d || m.cols() != d {
            return Err(invalid(format!("images must be {d}x{d}")));
        }
        let slot = self
            .images
            .get_mut(b.bits() as usize)
            .ok_or(Error::BladeOutOfRange { blade: b, signature: self.signature })?;
        *slot = m;
        Ok(self)
    }

    pub fn verify_homomorphism(&self) -> HomomorphismReport {
        let sig = self.signature;
        let d = self.target.dim();
        let id = Matrix::<R>::identity(d);
        let blades = sig.blades();
        let mut violations = Vec::new();
        for a in &blades {
            for b in &blades {
                let (c, sign) = blade_product(sig, *a, *b).expect("blades of the signature");
                let lhs = self.images[a.bits() as usize].mul(&self.images[b.bits() as usize]);
                let expected = &self.images[c.bits() as usize];
                let ok = match lhs {
                    Ok(m) if sign > 0 => &m == expected,
                    Ok(m) => m == expected.neg(),
                    Err(_) => false,
                };
                if !ok {
                    violations.push(Violation { left: *a, right: *b });
                }
            }
        }
        let (mut plus, mut minus, mut other) = (0, 0, 0);
        for img in &self.images {
            match img.mul(img) {
                Ok(sq) if sq == id => plus += 1,
                Ok(sq) if sq == id.neg() => minus += 1,
                _ => other += 1,
            }
        }
        HomomorphismReport {
            signature: sig,
            target: self.target,
            pairs_checked: blades.len() * blades.len(),
            violations,
            identity_ok: self.images[0] == id,
            census_expected: square_census(sig),
            census_observed: (plus, minus, other),
        }
    }

    /// Linear extension `Σ coef · image(blade)`.
    pub fn represent(&self, a: &Multivector<S>) -> Result<Matrix<R>> {
        if a.signature() != self.signature {
            return Err(Error::SignatureMismatch(self.signature, a.signature()));
        }
        let d = self.target.dim();
        let mut out = Matrix::zeros(d, d);
        for (b, c) in a.terms() {
            out = out.add(&self.images[b.bits() as usize].map(|e| e.scale_by(c)))?;
        }
        Ok(out)
    }

    fn flatten(m: &Matrix<R>) -> Vec<S> {
        m.entries().iter().flat_map(|e| e.components()).collect()
    }

    /// The multivector whose image is `m`. Coordinates come from projecting
    /// onto each blade image, and the result is checked by re-representing
    /// within the domain's tolerance.
    pub fn coordinates(&self, m: &Matrix<R>, domain: &ScalarDomain) -> Result<Multivector<S>> {
        let d = self.target.dim();
        if m.rows() != d || m.cols() != d {
            return Err(invalid(format!("expected a {d}x{d} matrix")));
        }
        let target = Self::flatten(m);
        let dot = |u: &[S], v: &[S]| {
            u.iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        };
        let mut terms = Vec::new();
        for (bits, img) in self.images.iter().enumerate() {
            let f = Self::flatten(img);
            let norm = dot(&f, &f).inv().ok_or_else(|| invalid("a blade image is zero"))?;
            terms.push((Blade::from_bits(bits as u8), dot(&target, &f) * norm));
        }
        let a = Multivector::from_terms(self.signature, terms)?;
        let back = Self::flatten(&self.represent(&a)?);
        if back.iter().zip(&target).any(|(x, y)| !domain.eq(x, y)) {
            return Err(invalid("matrix is outside the image of the representation"));
        }
        Ok(a)
    }

    /// True when the blade images are linearly independent over the field.
    pub fn is_injective(&self) -> bool {
        let rows: Vec<Vec<S>> = self.images.iter().map(Self::flatten).collect();
        rank(rows) == self.images.len()
    }
}

/// Row rank by Gaussian elimination. Pivots are exact nonzeros for
/// rationals and the largest magnitude for floats.
pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .max_by(|&a, &b| {
                rows[a][col]
                    .abs()
                    .partial_cmp(&rows[b][col].abs())
                    .unwrap_or(core::cmp::Ordering::Equal)
            });
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            let (top, rest) = rows.split_at_mut(r);
            for (x, p) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        rank += 1;
    }
    rank
}

fn m2<S: Scalar>(a: i64, b: i64, c: i64, d: i64) -> Matrix<S> {
    Matrix { rows: 2, cols: 2, data: vec![S::from_i64(a), S::from_i64(b), S::from_i64(c), S::from_i64(d)] }
}

/// `I₂`, `ℓ = diag(1, −1)`, `m = [[0,1],[1,0]]`, `n = [[0,1],[−1,0]]`.
pub fn basis_2x2<S: Scalar>() -> [Matrix<S>; 4] {
    [m2(1, 0, 0, 1), m2(1, 0, 0, -1), m2(0, 1, 1, 0), m2(0, 1, -1, 0)]
}

/// 2×2 block matrix `[[a, b], [c, d]]` of equally sized square blocks.
pub fn block<R: Ring>(a: &Matrix<R>, b: &Matrix<R>, c: &Matrix<R>, d: &Matrix<R>) -> Result<Matrix<R>> {
    let n = a.rows();
    for m in [a, b, c, d] {
        if m.rows() != n || m.cols() != n {
            return Err(invalid("blocks must be square and of equal size"));
        }
    }
    let mut data = Vec::with_capacity(4 * n * n);
    for (left, right) in [(a, b), (c, d)] {
        for r in 0..n {
            data.extend_from_slice(left.row(r));
            data.extend_from_slice(right.row(r));
        }
    }
    Matrix::new(2 * n, 2 * n, data)
}

fn diag<R: Ring>(a: &Matrix<R>, d: &Matrix<R>) -> Matrix<R> {
    let z = Matrix::zeros(a.rows(), a.cols());
    block(a, &z, &z, d).expect("equal blocks")
}

fn anti<R: Ring>(b: &Matrix<R>, c: &Matrix<R>) -> Matrix<R> {
    let z = Matrix::zeros(b.rows(), b.cols());
    block(&z, b, c, &z).expect("equal blocks")
}

fn scalar_matrix<R: Ring>(e: R) -> Matrix<R> {
    Matrix { rows: 1, cols: 1, data: vec![e] }
}

fn q2<S: Scalar>(a: Quaternion<S>, b: Quaternion<S>, c: Quaternion<S>, d: Quaternion<S>) -> Matrix<Quaternion<S>> {
    Matrix { rows: 2, cols: 2, data: vec![a, b, c, d] }
}

/// Quaternion units i, j, k as 4×4 real matrices.
pub fn real4_units<S: Scalar>() -> [Matrix<S>; 3] {
    let rows = |r: [[i64; 4]; 4]| Matrix {
        rows: 4,
        cols: 4,
        data: r.iter().flatten().map(|&v| S::from_i64(v)).collect(),
    };
    [
        rows([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
        rows([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]),
        rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    ]
}

/// `w + xi + yj + zk ↦ [[w + xi, y + zi], [−y + zi, w − xi]]`.
pub fn quaternion_to_complex2<S: Scalar>(q: &Quaternion<S>) -> Matrix<Complex<S>> {
    Matrix {
        rows: 2,
        cols: 2,
        data: vec![
            Complex::new(q.w.clone(), q.x.clone()),
            Complex::new(q.y.clone(), q.z.clone()),
            Complex::new(-q.y.clone(), q.z.clone()),
            Complex::new(q.w.clone(), -q.x.clone()),
        ],
    }
}

/// `w I₄ + x i + y j + z k` with the units of [`real4_units`].
pub fn quaternion_to_real4<S: Scalar>(q: &Quaternion<S>) -> Matrix<S> {
    let [i, j, k] = real4_units::<S>();
    let mut m = Matrix::identity(4).map(|e: &S| e.clone() * q.w.clone());
    for (unit, c) in [(i, &q.x), (j, &q.y), (k, &q.z)] {
        m = m.add(&unit.map(|e| e.clone() * c.clone())).expect("4x4");
    }
    m
}

/// Replaces each complex entry `a + bi` by the real block `[[a, b], [−b, a]]`.
pub fn complex_to_real<S: Scalar>(m: &Matrix<Complex<S>>) -> Matrix<S> {
    let (r, c) = (m.rows(), m.cols());
    let mut data = vec![S::zero(); 4 * r * c];
    let w = 2 * c;
    for i in 0..r {
        for j in 0..c {
            let z = m.get(i, j);
            data[(2 * i) * w + 2 * j] = z.re.clone();
            data[(2 * i) * w + 2 * j + 1] = z.im.clone();
            data[(2 * i + 1) * w + 2 * j] = -z.im.clone();
            data[(2 * i + 1) * w + 2 * j + 1] = z.re.clone();
        }
    }
    Matrix { rows: 2 * r, cols: 2 * c, data }
}

/// Replaces each quaternion entry by its 4×4 real block.
pub fn quaternion_to_real<S: Scalar>(m: &Matrix<Quaternion<S>>) -> Matrix<S> {
    let (r, c) = (m.rows(), m.cols());
    let w = 4 * c;
    let mut data = vec![S::zero(); 16 * r * c];
    for i in 0..r {
        for j in 0..c {
            let b = quaternion_to_real4(m.get(i, j));
            for bi in 0..4 {
                for bj in 0..4 {
                    data[(4 * i + bi) * w + 4 * j + bj] = b.get(bi, bj).clone();
                }
            }
        }
    }
    Matrix { rows: 4 * r, cols: 4 * c, data }
}

/// A catalogue representation over one of the three entry rings.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyRepresentation<S: Scalar> {
    Real(Representation<S, S>),
    Complex(Representation<S, Complex<S>>),
    Quaternion(Representation<S, Quaternion<S>>),
}

impl<S: Scalar + Entry<S>> AnyRepresentation<S> {
    pub fn signature(&self) -> Signature {
        match self {
            Self::Real(r) => r.signature(),
            Self::Complex(r) => r.signature(),
            Self::Quaternion(r) => r.signature(),
        }
    }

    pub fn target(&self) -> Target {
        match self {
            Self::Real(r) => r.target(),
            Self::Complex(r) => r.target(),
            Self::Quaternion(r) => r.target(),
        }
    }

    pub fn verify_homomorphism(&self) -> HomomorphismReport {
        match self {
            Self::Real(r) => r.verify_homomorphism(),
            Self::Complex(r) => r.verify_homomorphism(),
            Self::Quaternion(r) => r.verify_homomorphism(),
        }
    }

    /// Entry text of a blade's image.
    pub fn image_text(&self, b: Blade) -> Result<Vec<Vec<String>>> {
        Ok(match self {
            Self::Real(r) => r.image(b)?.to_text(),
            Self::Complex(r) => r.image(b)?.to_text(),
            Self::Quaternion(r) => r.image(b)?.to_text(),
        })
    }

    /// Entry text of the image of a multivector.
    pub fn represent_text(&self, a: &Multivector<S>) -> Result<Vec<Vec<String>>> {
        Ok(match self {
            Self::Real(r) => r.represent(a)?.to_text(),
            Self::Complex(r) => r.represent(a)?.to_text(),
            Self::Quaternion(r) => r.represent(a)?.to_text(),
        })
    }

    pub fn is_injective(&self) -> bool {
        match self {
            Self::Real(r) => r.is_injective(),
            Self::Complex(r) => r.is_injective(),
            Self::Quaternion(r) => r.is_injective(),
        }
    }
}

/// Every (signature, target) pair with a built-in representation.
pub const CATALOGUE: [(usize, usize, &str); 10] = [
    (1, 0, "real-2"),
    (0, 1, "real-2"),
    (2, 0, "real-2"),
    (0, 2, "real-4"),
    (0, 2, "quaternion-1"),
    (3, 0, "real-4"),
    (3, 0, "complex-2"),
    (0, 3, "quaternion-2"),
    (3, 1, "real-4"),
    (1, 3, "quaternion-2"),
];

/// Catalogue targets available for a signature, in catalogue order.
pub fn targets_for(sig: Signature) -> Vec<Target> {
    CATALOGUE
        .iter()
        .filter(|(p, q, _)| (*p, *q) == (sig.p(), sig.q()))
        .map(|(_, _, t)| t.parse().expect("catalogue targets parse"))
        .collect()
}

/// Builds the catalogue representation of `sig` over `target`.
pub fn build_representation<S: Scalar + Entry<S>>(sig: Signature, target: Target) -> Result<AnyRepresentation<S>> {
    let [_, l, m, n] = basis_2x2::<S>();
    let unsupported = || Error::UnsupportedRepresentation { signature: sig, target: target.to_string() };
    let real = |gens: Vec<Matrix<S>>| Representation::from_generators(sig, target, gens).map(AnyRepresentation::Real);
    let quat = |gens: Vec<Matrix<Quaternion<S>>>| {
        Representation::from_generators(sig, target, gens).map(AnyRepresentation::Quaternion)
    };
    let (qi, qj, qk) = (Quaternion::<S>::i(), Quaternion::<S>::j(), Quaternion::<S>::k());
    let qz = Quaternion::<S>::zero;
    let qoff = |u: Quaternion<S>| q2(qz(), u.clone(), u, qz());
    match (sig.p(), sig.q(), target) {
        (1, 0, Target::Real(2)) => real(vec![m]),
        (0, 1, Target::Real(2)) => real(vec![n]),
        (2, 0, Target::Real(2)) => real(vec![l, m]),
        (0, 2, Target::Real(4)) => real(vec![block(&Matrix::zeros(2, 2), &l, &l.neg(), &Matrix::zeros(2, 2))?, anti(&m, &m.neg())]),
        (0, 2, Target::Quaternion(1)) => quat(vec![scalar_matrix(qi), scalar_matrix(qj)]),
        (3, 0, Target::Real(4)) => real(vec![diag(&l, &l), diag(&m, &m.neg()), anti(&m, &m)]),
        (3, 0, Target::Complex(2)) => {
            let c = |v: [(i64, i64); 4]| Matrix {
                rows: 2,
                cols: 2,
                data: v.iter().map(|&(re, im)| Complex::new(S::from_i64(re), S::from_i64(im))).collect(),
            };
            let sigma1 = c([(0, 0), (1, 0), (1, 0), (0, 0)]);
            let sigma2 = c([(0, 0), (0, -1), (0, 1), (0, 0)]);
            let sigma3 = c([(1, 0), (0, 0), (0, 0), (-1, 0)]);
            Representation::from_generators(sig, target, vec![sigma1, sigma2, sigma3]).map(AnyRepresentation::Complex)
        }
        (0, 3, Target::Quaternion(2)) => quat(vec![qoff(qi), qoff(qj), qoff(qk)]),
        // generators reordered so the three squaring to +1 come first
        (3, 1, Target::Real(4)) => real(vec![diag(&m, &m), diag(&l, &l.neg()), anti(&l, &l), diag(&n, &n)]),
        (1, 3, Target::Quaternion(2)) => {
            let e0 = q2(Quaternion::one(), qz(), qz(), -Quaternion::one());
            quat(vec![e0, qoff(qi), qoff(qj), qoff(qk)])
        }
        _ => Err(unsupported()),
    }
}
