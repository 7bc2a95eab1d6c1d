//! Determinants, inverses and null elements of Cl(1,3) through its
//! representation as 2×2 quaternion matrices.

use alloc::format;
use alloc::vec;

use crate::algebra::{Blade, Multivector};
use crate::error::{invalid, Error, Result};
use crate::quaternion::Quaternion;
use crate::reps::{build_representation, AnyRepresentation, Entry, Matrix, Representation, Target};
use crate::scalar::{Rational, Ring, Scalar, ScalarDomain};
use crate::spacetime::spacetime;

/// `[[q11, q12], [q21, q22]]` over the quaternions.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionMatrix2<S = Rational> {
    pub q11: Quaternion<S>,
    pub q12: Quaternion<S>,
    pub q21: Quaternion<S>,
    pub q22: Quaternion<S>,
}

fn spacetime_rep<S: Scalar + Entry<S>>() -> Representation<S, Quaternion<S>> {
    match build_representation::<S>(spacetime(), Target::Quaternion(2)) {
        Ok(AnyRepresentation::Quaternion(r)) => r,
        _ => unreachable!("the catalogue holds Cl(1,3) over quaternion-2"),
    }
}

impl<S: Scalar + Entry<S>> QuaternionMatrix2<S> {
    pub fn new(q11: Quaternion<S>, q12: Quaternion<S>, q21: Quaternion<S>, q22: Quaternion<S>) -> Self {
        Self { q11, q12, q21, q22 }
    }

    pub fn identity() -> Self {
        Self::new(Quaternion::one(), Quaternion::zero(), Quaternion::zero(), Quaternion::one())
    }

    pub fn from_multivector(a: &Multivector<S>) -> Result<Self> {
        let m = spacetime_rep::<S>().represent(a)?;
        Ok(Self::from_matrix(&m))
    }

    fn from_matrix(m: &Matrix<Quaternion<S>>) -> Self {
        Self::new(m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone())
    }

    pub fn to_matrix(&self) -> Matrix<Quaternion<S>> {
        Matrix::new(2, 2, vec![self.q11.clone(), self.q12.clone(), self.q21.clone(), self.q22.clone()])
            .expect("four entries")
    }

    pub fn to_multivector(&self, domain: &ScalarDomain) -> Result<Multivector<S>> {
        spacetime_rep::<S>().coordinates(&self.to_matrix(), domain)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_matrix(&self.to_matrix().mul(&other.to_matrix()).expect("2x2"))
    }
}

/// `w² + x² + y² + z²`, the determinant of the complex 2×2 form of `q`.
pub fn quaternion_norm_sq<S: Scalar>(q: &Quaternion<S>) -> S {
    q.norm_sq()
}

fn is_zero_q<S: Scalar>(q: &Quaternion<S>, domain: &ScalarDomain) -> bool {
    q.components().iter().all(|c| domain.is_zero(c))
}

fn inv<S: Scalar>(q: &Quaternion<S>) -> Result<Quaternion<S>> {
    q.inverse().ok_or_else(|| invalid("quaternion has no inverse"))
}

fn mul3<S: Scalar>(a: &Quaternion<S>, b: &Quaternion<S>, c: &Quaternion<S>) -> Quaternion<S> {
    a.clone() * b.clone() * c.clone()
}

/// Block determinant, pivoting on whichever diagonal entry is nonzero.
pub fn block_det<S: Scalar>(m: &QuaternionMatrix2<S>, domain: &ScalarDomain) -> S {
    let QuaternionMatrix2 { q11, q12, q21, q22 } = m;
    if let (false, Some(i11)) = (is_zero_q(q11, domain), q11.inverse()) {
        q11.norm_sq() * (q22.clone() - mul3(q21, &i11, q12)).norm_sq()
    } else if let (false, Some(i22)) = (is_zero_q(q22, domain), q22.inverse()) {
        q22.norm_sq() * (q11.clone() - mul3(q12, &i22, q21)).norm_sq()
    } else {
        q12.norm_sq() * q21.norm_sq()
    }
}

fn block_inverse<S: Scalar>(m: &QuaternionMatrix2<S>, domain: &ScalarDomain) -> Result<QuaternionMatrix2<S>> {
    let QuaternionMatrix2 { q11, q12, q21, q22 } = m;
    let (z11, z22) = (is_zero_q(q11, domain), is_zero_q(q22, domain));
    Ok(match (z11, z22) {
        (false, false) => {
            let (i11, i22) = (inv(q11)?, inv(q22)?);
            let neg_schur = inv(&(mul3(q21, &i11, q12) - q22.clone()))?;
            QuaternionMatrix2 {
                q11: inv(&(q11.clone() - mul3(q12, &i22, q21)))?,
                q12: mul3(&i11, q12, &neg_schur),
                q21: mul3(&neg_schur, q21, &i11),
                q22: inv(&(q22.clone() - mul3(q21, &i11, q12)))?,
            }
        }
        (false, true) => {
            let i11 = inv(q11)?;
            let s = inv(&(q22.clone() - mul3(q21, &i11, q12)))?;
            let a = i11.clone() * q12.clone() * s.clone();
            QuaternionMatrix2 {
                q11: i11.clone() + a.clone() * q21.clone() * i11.clone(),
                q12: -a,
                q21: -mul3(&s, q21, &i11),
                q22: s,
            }
        }
        (true, false) => {
            let i22 = inv(q22)?;
            let t = inv(&(q11.clone() - mul3(q12, &i22, q21)))?;
            let b = i22.clone() * q21.clone() * t.clone();
            QuaternionMatrix2 {
                q11: t.clone(),
                q12: -mul3(&t, q12, &i22),
                q21: -b.clone(),
                q22: i22.clone() + b * q12.clone() * i22,
            }
        }
        (true, true) => QuaternionMatrix2 {
            q11: Quaternion::zero(),
            q12: inv(q21)?,
            q21: inv(q12)?,
            q22: Quaternion::zero(),
        },
    })
}

/// Which kind of element fails to be invertible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NullKind {
    Invertible,
    NullVector,
    NullBivector,
    NullMixed,
}

impl NullKind {
    pub fn name(&self) -> &'static str {
        match self {
            NullKind::Invertible => "invertible",
            NullKind::NullVector => "null-vector",
            NullKind::NullBivector => "null-bivector",
            NullKind::NullMixed => "null-mixed",
        }
    }
}

impl core::fmt::Display for NullKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// The quantity whose vanishing decides the classification.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness<S = Rational> {
    /// `x²` of a vector.
    Interval(S),
    /// `|E|² − |B|²` and `E·B` of a bivector.
    Field { norm_gap: S, dot: S },
    /// Block determinant of a general element.
    Determinant(S),
}

#[derive(Debug, Clone, PartialEq)]
pub struct NullClassification<S = Rational> {
    pub kind: NullKind,
    pub witness: Witness<S>,
    pub determinant: S,
}

impl<S> NullClassification<S> {
    pub fn is_invertible(&self) -> bool {
        self.kind == NullKind::Invertible
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Inversion<S = Rational> {
    Invertible(Multivector<S>),
    Singular(NullClassification<S>),
}

fn require_spacetime<S: Scalar>(a: &Multivector<S>) -> Result<()> {
    if a.signature() != spacetime() {
        return Err(Error::SignatureMismatch(spacetime(), a.signature()));
    }
    Ok(())
}

/// Classifies any Cl(1,3) element. The kind is decided by the block
/// determinant; the witness is specialised for vectors and bivectors.
pub fn classify<S: Scalar + Entry<S>>(a: &Multivector<S>, domain: &ScalarDomain) -> Result<NullClassification<S>> {
    require_spacetime(a)?;
    let det = block_det(&QuaternionMatrix2::from_multivector(a)?, domain);
    let singular = domain.is_zero(&det);
    let (null_kind, witness) = if a.is_grade(1) && !a.is_zero() {
        (NullKind::NullVector, Witness::Interval((a * a).scalar_part()))
    } else if a.is_grade(2) && !a.is_zero() {
        let f = is_free_field(a, domain)?;
        (NullKind::NullBivector, Witness::Field { norm_gap: f.norm_gap, dot: f.dot })
    } else {
        (NullKind::NullMixed, Witness::Determinant(det.clone()))
    };
    let kind = if singular { null_kind } else { NullKind::Invertible };
    Ok(NullClassification { kind, witness, determinant: det })
}

/// Inverse of `a`, or the classification explaining why there is none.
pub fn invert<S: Scalar + Entry<S>>(a: &Multivector<S>, domain: &ScalarDomain) -> Result<Inversion<S>> {
    let c = classify(a, domain)?;
    if !c.is_invertible() {
        return Ok(Inversion::Singular(c));
    }
    let m = QuaternionMatrix2::from_multivector(a)?;
    let w = block_inverse(&m, domain)?;
    Ok(Inversion::Invertible(w.to_multivector(domain)?))
}

/// Classification of a grade-1 element: null exactly on the light cone.
pub fn classify_vector<S: Scalar + Entry<S>>(x: &Multivector<S>, domain: &ScalarDomain) -> Result<NullClassification<S>> {
    require_spacetime(x)?;
    if !x.is_grade(1) {
        return Err(invalid(format!("expected a vector, got {x}")));
    }
    classify(x, domain)
}

/// A potential `φ e0 + A·e`; singular when `φ² = |A|²`.
pub fn classify_potential<S: Scalar + Entry<S>>(
    phi: S,
    a: [S; 3],
    domain: &ScalarDomain,
) -> Result<NullClassification<S>> {
    let [a1, a2, a3] = a;
    classify_vector(&Multivector::vector(spacetime(), &[phi, a1, a2, a3])?, domain)
}

/// The symbol `ω e0 − k·e` of the differential operator on a plane wave.
pub fn differential_symbol<S: Scalar>(omega: S, k: [S; 3]) -> Result<Multivector<S>> {
    let [k1, k2, k3] = k;
    Multivector::vector(spacetime(), &[omega, -k1, -k2, -k3])
}

const E_BLADES: [u8; 3] = [0b0011, 0b0101, 0b1001];
const B_BLADES: [(u8, i64); 3] = [(0b1100, 1), (0b1010, -1), (0b0110, 1)];

/// `E1 e01 + E2 e02 + E3 e03 + B1 e23 + B2 e31 + B3 e12`.
pub fn em_bivector<S: Scalar>(e: [S; 3], b: [S; 3]) -> Multivector<S> {
    let mut terms = vec![];
    for (bits, c) in E_BLADES.iter().zip(e) {
        terms.push((Blade::from_bits(*bits), c));
    }
    for ((bits, sign), c) in B_BLADES.iter().zip(b) {
        terms.push((Blade::from_bits(*bits), c * S::from_i64(*sign)));
    }
    Multivector::from_terms(spacetime(), terms).expect("spacetime blades")
}

/// `(E, B)` of a bivector, inverting [`em_bivector`].
pub fn field_components<S: Scalar>(f: &Multivector<S>) -> Result<([S; 3], [S; 3])> {
    require_spacetime(f)?;
    if !f.is_grade(2) {
        return Err(invalid(format!("expected a bivector, got {f}")));
    }
    let e = E_BLADES.map(|bits| f.coefficient(Blade::from_bits(bits)));
    let b = B_BLADES.map(|(bits, sign)| f.coefficient(Blade::from_bits(bits)) * S::from_i64(sign));
    Ok((e, b))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldReport<S = Rational> {
    pub free: bool,
    /// `|E|² − |B|²`.
    pub norm_gap: S,
    /// `E·B`.
    pub dot: S,
}

/// A free electromagnetic wave has `|E| = |B|` and `E ⊥ B`.
pub fn is_free_field<S: Scalar>(f: &Multivector<S>, domain: &ScalarDomain) -> Result<FieldReport<S>> {
    let (e, b) = field_components(f)?;
    let dot3 = |u: &[S; 3], v: &[S; 3]| u.iter().zip(v).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
    let norm_gap = dot3(&e, &e) - dot3(&b, &b);
    let dot = dot3(&e, &b);
    let free = domain.is_zero(&norm_gap) && domain.is_zero(&dot);
    Ok(FieldReport { free, norm_gap, dot })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type R = Rational;

    fn exact() -> ScalarDomain {
        ScalarDomain::exact()
    }

    fn mv(text: &str) -> Multivector {
        Multivector::parse(spacetime(), text).unwrap()
    }

    fn qt(text: &str) -> Quaternion<R> {
        Quaternion::parse(text).unwrap()
    }

    fn inverse_of(text: &str) -> Multivector {
        match invert(&mv(text), &exact()).unwrap() {
            Inversion::Invertible(w) => w,
            Inversion::Singular(c) => panic!("{text} is singular: {c:?}"),
        }
    }

    #[test]
    fn norm_sq_examples() {
        assert_eq!(quaternion_norm_sq(&qt("1+2i+3j+4k")), q("30"));
        assert_eq!(quaternion_norm_sq(&Quaternion::<R>::zero()), q("0"));
        assert_eq!(quaternion_norm_sq(&Quaternion::<R>::i()), q("1"));
    }

    #[test]
    fn determinants() {
        let d = exact();
        assert_eq!(block_det(&QuaternionMatrix2::<R>::identity(), &d), q("1"));
        let light = QuaternionMatrix2::from_multivector(&mv("e0 + e1")).unwrap();
        assert_eq!(light, QuaternionMatrix2::new(qt("1"), qt("i"), qt("i"), qt("-1")));
        assert_eq!(block_det(&light, &d), q("0"));
        let anti = QuaternionMatrix2::new(qt("0"), qt("2"), qt("j"), qt("0"));
        assert_eq!(block_det(&anti, &d), q("4"));
        // a vector's determinant is the square of its interval
        let x = mv("3*e0 + e1 + -1/2*e2 + 2*e3");
        let sq = (&x * &x).scalar_part();
        assert_eq!(block_det(&QuaternionMatrix2::from_multivector(&x).unwrap(), &d), &sq * &sq);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_of("2"), mv("1/2"));
        assert_eq!(inverse_of("e0"), mv("e0"));
        assert_eq!(inverse_of("e1"), mv("-e1"));
        for text in ["1 + e01 + 2*e123", "e1 + e02", "e0 + 3*e2 + e0123", "e013 + 2*e1 + -1/3*e23"] {
            let a = mv(text);
            let w = inverse_of(text);
            assert_eq!(&a * &w, mv("1"), "{text}");
            assert_eq!(&w * &a, mv("1"), "{text}");
        }
    }

    #[test]
    fn every_pivot_branch_inverts() {
        let d = exact();
        let cases = [
            QuaternionMatrix2::new(qt("1+i"), qt("j"), qt("2"), qt("0")),
            QuaternionMatrix2::new(qt("0"), qt("k"), qt("1-j"), qt("3")),
            QuaternionMatrix2::new(qt("0"), qt("2+k"), qt("i"), qt("0")),
            QuaternionMatrix2::new(qt("1"), qt("i"), qt("j"), qt("1/2+k")),
        ];
        for m in cases {
            let w = block_inverse(&m, &d).unwrap();
            assert_eq!(m.mul(&w), QuaternionMatrix2::identity(), "{m:?}");
            assert_eq!(w.mul(&m), QuaternionMatrix2::identity(), "{m:?}");
        }
    }

    #[test]
    fn lightlike_vector_is_singular() {
        let Inversion::Singular(c) = invert(&mv("e0 + e1"), &exact()).unwrap() else { panic!() };
        assert_eq!(c.kind, NullKind::NullVector);
        assert_eq!(c.witness, Witness::Interval(q("0")));
        assert!(!classify(&mv("0"), &exact()).unwrap().is_invertible());
    }

    #[test]
    fn vector_classification() {
        let d = exact();
        let v = |c: [i64; 4]| Multivector::vector(spacetime(), &c.map(R::from)).unwrap();
        assert_eq!(classify_vector(&v([1, 1, 0, 0]), &d).unwrap().kind, NullKind::NullVector);
        assert_eq!(classify_vector(&v([1, 0, 0, 0]), &d).unwrap().kind, NullKind::Invertible);
        assert_eq!(classify_vector(&v([5, 3, 4, 0]), &d).unwrap().kind, NullKind::NullVector);
        assert!(classify_vector(&mv("e01"), &d).is_err());
        let pot = classify_potential(q("5"), [q("0"), q("3"), q("-4")], &d).unwrap();
        assert_eq!(pot.kind, NullKind::NullVector);
        let sym = differential_symbol(q("2"), [q("2"), q("0"), q("0")]).unwrap();
        assert_eq!(sym, mv("2*e0 + -2*e1"));
        assert_eq!(classify_vector(&sym, &d).unwrap().kind, NullKind::NullVector);
    }

    #[test]
    fn em_fields() {
        let z = || [q("0"), q("0"), q("0")];
        assert_eq!(em_bivector([q("1"), q("0"), q("0")], z()), mv("e01"));
        assert!(em_bivector(z(), z()).is_zero());
        assert_eq!(em_bivector(z(), [q("0"), q("0"), q("1")]), mv("e12"));
        assert_eq!(em_bivector(z(), [q("0"), q("1"), q("0")]), mv("-e13"));
        let f = em_bivector([q("1"), q("-2"), q("3")], [q("4"), q("5"), q("-6")]);
        assert_eq!(field_components(&f).unwrap(), ([q("1"), q("-2"), q("3")], [q("4"), q("5"), q("-6")]));
    }

    #[test]
    fn free_field_examples() {
        let d = exact();
        let v = |c: [i64; 3]| c.map(R::from);
        let wave = em_bivector(v([1, 0, 0]), v([0, 1, 0]));
        assert!(is_free_field(&wave, &d).unwrap().free);
        let c = classify(&wave, &d).unwrap();
        assert_eq!(c.kind, NullKind::NullBivector);
        assert_eq!(c.witness, Witness::Field { norm_gap: q("0"), dot: q("0") });
        let parallel = em_bivector(v([1, 0, 0]), v([1, 0, 0]));
        let report = is_free_field(&parallel, &d).unwrap();
        assert!(!report.free);
        assert_eq!(report.dot, q("1"));
        assert!(classify(&parallel, &d).unwrap().is_invertible());
        let unequal = em_bivector(v([2, 0, 0]), v([0, 1, 0]));
        assert_eq!(is_free_field(&unequal, &d).unwrap().norm_gap, q("3"));
        assert!(classify(&unequal, &d).unwrap().is_invertible());
        assert!(is_free_field(&mv("e0"), &d).is_err());
    }

    #[test]
    fn approximate_inverse() {
        let d = ScalarDomain::approximate(1e-9).unwrap();
        let a = Multivector::<f64>::parse(spacetime(), "0.3 + 1.7*e02 + -2.5*e123 + e0").unwrap();
        let Inversion::Invertible(w) = invert(&a, &d).unwrap() else { panic!() };
        assert!((&a * &w).approx_eq(&Multivector::one(spacetime()), 1e-9));
    }
}
