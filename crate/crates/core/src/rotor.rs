//! Rotors, rigid motions and frames in two and three dimensions.
//!
//! A rotor acts on every grade by the two-sided product `V A Ṽ / (V Ṽ)`, so
//! any nonzero rescaling of the versor gives the same rotation. Rigid-body
//! constructions work in the anti-Euclidean algebras Cl(0,2) and Cl(0,3),
//! where vectors square to minus their length squared.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Multivector, Signature};
use crate::error::{invalid, Error, Result};
use crate::scalar::{Rational, Scalar, ScalarDomain};

/// Even versor with a nonzero scalar norm.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor<S = Rational> {
    versor: Multivector<S>,
    norm_sq: S,
}

impl<S: Scalar> Rotor<S> {
    /// Wraps an even versor; `V Ṽ` must be a nonzero scalar.
    pub fn new(versor: Multivector<S>) -> Result<Self> {
        if !versor.is_even() {
            return Err(invalid("a rotor versor must have even grade only"));
        }
        let n = versor.norm_sq();
        let s = n.scalar_part();
        if s.is_zero() {
            return Err(invalid("rotor versor has zero norm"));
        }
        let slack = if S::EXACT { 0.0 } else { 1e-9 * s.to_f64().abs().max(1.0) };
        let pure = n.terms().all(|(b, c)| b.is_scalar() || c.within(&S::zero(), slack));
        if !pure {
            return Err(invalid("rotor versor norm is not a pure scalar"));
        }
        Ok(Self { versor, norm_sq: s })
    }

    pub fn identity(sig: Signature) -> Self {
        Self { versor: Multivector::one(sig), norm_sq: S::one() }
    }

    pub fn versor(&self) -> &Multivector<S> {
        &self.versor
    }

    pub fn norm_sq(&self) -> &S {
        &self.norm_sq
    }

    pub fn signature(&self) -> Signature {
        self.versor.signature()
    }

    /// `V A Ṽ / (V Ṽ)`.
    pub fn sandwich(&self, a: &Multivector<S>) -> Result<Multivector<S>> {
        let inv = self.norm_sq.inv().ok_or_else(|| invalid("rotor versor has zero norm"))?;
        let left = self.versor.product(a)?;
        Ok(left.product(&self.versor.reverse())?.scale(&inv))
    }

    /// The rotor that undoes this one.
    pub fn inverse(&self) -> Self {
        Self { versor: self.versor.reverse(), norm_sq: self.norm_sq.clone() }
    }

    /// Rotor equal to `self` applied after `first`.
    pub fn after(&self, first: &Self) -> Result<Self> {
        compose(self, first)
    }

    /// Same rotor with the versor multiplied by a nonzero scalar.
    pub fn rescaled(&self, lambda: &S) -> Result<Self> {
        if lambda.is_zero() {
            return Err(invalid("rescaling factor must be nonzero"));
        }
        Ok(Self {
            versor: self.versor.scale(lambda),
            norm_sq: self.norm_sq.clone() * lambda.clone() * lambda.clone(),
        })
    }

    /// True when both rotors move every generator to the same place, which
    /// fixes the action on the whole algebra.
    pub fn same_action(&self, other: &Self, domain: &ScalarDomain) -> Result<bool> {
        let sig = self.signature();
        if sig != other.signature() {
            return Err(Error::SignatureMismatch(sig, other.signature()));
        }
        for i in 0..sig.n() {
            let e = Multivector::basis(sig, i)?;
            if !self.sandwich(&e)?.approx_eq(&other.sandwich(&e)?, domain.tolerance()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Rotor applying `first` and then `second`: versor `V₂ V₁`.
pub fn compose<S: Scalar>(second: &Rotor<S>, first: &Rotor<S>) -> Result<Rotor<S>> {
    Ok(Rotor {
        versor: second.versor.product(&first.versor)?,
        norm_sq: second.norm_sq.clone() * first.norm_sq.clone(),
    })
}

fn require_anti_euclidean(sig: Signature) -> Result<()> {
    if sig.p() != 0 {
        return Err(Error::EuclideanMetric(sig));
    }
    Ok(())
}

fn require_vector<S: Scalar>(v: &Multivector<S>, what: &str) -> Result<()> {
    if !v.is_grade(1) {
        return Err(invalid(format!("{what} must be a vector")));
    }
    if v.is_zero() {
        return Err(invalid(format!("{what} must be nonzero")));
    }
    Ok(())
}

fn square<S: Scalar>(v: &Multivector<S>) -> S {
    (v * v).scalar_part()
}

/// Rotor turning the direction of `a` onto the direction of `b` in the
/// plane they span, built from the bisector `c` as the versor `c a`.
///
/// Requires an anti-Euclidean signature; see
/// [`rotor_from_vector_pair_any_metric`] for experiments in Cl(n,0).
pub fn rotor_from_vector_pair<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> Result<Rotor<S>> {
    require_anti_euclidean(a.signature())?;
    rotor_from_vector_pair_any_metric(a, b)
}

/// [`rotor_from_vector_pair`] without the metric check.
pub fn rotor_from_vector_pair_any_metric<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Rotor<S>> {
    require_vector(a, "a")?;
    require_vector(b, "b")?;
    let sig = a.signature();
    if sig != b.signature() {
        return Err(Error::SignatureMismatch(sig, b.signature()));
    }
    let (a2, b2) = (square(a), square(b));
    // rescale b to the length of a; exact when |a|/|b| is rational
    let c = if a2 == b2 {
        a + b
    } else {
        let ratio = a2.clone() * b2.inv().ok_or_else(|| invalid("b is a null vector"))?;
        if ratio.is_negative() {
            return Err(invalid("a and b have squares of opposite sign"));
        }
        a + &b.scale(&ratio.sqrt()?)
    };
    if c.is_zero() {
        if sig.n() != 2 {
            return Err(Error::AmbiguousRotation);
        }
        // half turn in the plane as two quarter turns
        let plane = Multivector::blade(sig, sig.pseudoscalar(), S::one())?;
        let perp = a * &plane;
        let first = Rotor::new(&(a + &perp) * a)?;
        let second = Rotor::new(&(&perp - a) * &perp)?;
        return compose(&second, &first);
    }
    Rotor::new(&c * a)
}

/// Rotation by π about `axis` in 3D: the versor is the plane orthogonal to
/// the axis.
pub fn half_turn<S: Scalar>(axis: &Multivector<S>) -> Result<Rotor<S>> {
    require_vector(axis, "axis")?;
    require_3d(axis.signature())?;
    Rotor::new(axis.dual())
}

fn require_3d(sig: Signature) -> Result<()> {
    require_anti_euclidean(sig)?;
    if sig.n() != 3 {
        return Err(Error::UnsupportedSignature(format!("expected Cl(0,3), got {sig}")));
    }
    Ok(())
}

/// `a × b = −(a ∧ b) v̂` in Cl(0,3).
pub fn cross<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
    require_3d(a.signature())?;
    Ok(-a.wedge(b)?.dual())
}

/// Component of `a` orthogonal to `m`: `a − (a·m) m / m²`.
pub fn project_onto_plane<S: Scalar>(a: &Multivector<S>, m: &Multivector<S>) -> Result<Multivector<S>> {
    require_vector(m, "m")?;
    let along = a.dot(m)?.scalar_part();
    let m2 = square(m).inv().ok_or_else(|| invalid("m is a null vector"))?;
    a.try_sub(&m.scale(&(along * m2)))
}

/// 2×2 matrix acting on column coordinates exactly as the rotor acts on
/// vectors of Cl(0,2).
pub fn rotation_matrix_2d<S: Scalar>(r: &Rotor<S>) -> Result<[[S; 2]; 2]> {
    let sig = r.signature();
    require_anti_euclidean(sig)?;
    if sig.n() != 2 {
        return Err(Error::UnsupportedSignature(format!("expected Cl(0,2), got {sig}")));
    }
    let x = r.sandwich(&Multivector::basis(sig, 0)?)?.vector_coords()?;
    let y = r.sandwich(&Multivector::basis(sig, 1)?)?.vector_coords()?;
    Ok([[x[0].clone(), y[0].clone()], [x[1].clone(), y[1].clone()]])
}

impl Rotor<f64> {
    /// `cos(φ/2) + B sin(φ/2)` for a unit plane bivector `B`.
    pub fn from_plane_angle(plane: &Multivector<f64>, phi: f64) -> Result<Self> {
        if !plane.is_grade(2) || plane.is_zero() {
            return Err(invalid("plane must be a nonzero bivector"));
        }
        let unit = plane.scale(&(1.0 / libm::sqrt(plane.coefficient_norm_sq())));
        let sig = plane.signature();
        Rotor::new(Multivector::scalar(sig, libm::cos(phi / 2.0)) + unit.scale(&libm::sin(phi / 2.0)))
    }

    /// Rotation by `phi` about `axis` in Cl(0,3), counter-clockwise when
    /// looking down the axis.
    pub fn from_axis_angle(axis: &Multivector<f64>, phi: f64) -> Result<Self> {
        require_vector(axis, "axis")?;
        require_3d(axis.signature())?;
        Self::from_plane_angle(&-axis.dual(), phi)
    }

    /// Unit axis and angle in [0, π] of a Cl(0,3) rotor. The identity
    /// reports the z axis with angle 0.
    pub fn axis_angle(&self) -> Result<([f64; 3], f64)> {
        let sig = self.signature();
        require_3d(sig)?;
        let scale = 1.0 / libm::sqrt(self.norm_sq);
        let mut v = self.versor.scale(&scale);
        if v.scalar_part() < 0.0 {
            v = -v;
        }
        let s = v.scalar_part();
        let plane = v.grade_part(2);
        let sin_half = libm::sqrt(plane.coefficient_norm_sq());
        let angle = 2.0 * libm::atan2(sin_half, s);
        if sin_half == 0.0 {
            return Ok(([0.0, 0.0, 1.0], 0.0));
        }
        let axis = plane.dual().scale(&(-1.0 / sin_half));
        let c = axis.vector_coords()?;
        Ok(([c[0], c[1], c[2]], angle))
    }
}

/// A translation followed by a rotation about the translated anchor:
/// `P ↦ A + t + R(P − A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RigidMotion<S = Rational> {
    anchor: Multivector<S>,
    translation: Multivector<S>,
    rotation: Rotor<S>,
}

impl<S: Scalar> RigidMotion<S> {
    pub fn new(anchor: Multivector<S>, translation: Multivector<S>, rotation: Rotor<S>) -> Result<Self> {
        let sig = rotation.signature();
        for v in [&anchor, &translation] {
            if v.signature() != sig {
                return Err(Error::SignatureMismatch(sig, v.signature()));
            }
            if !v.is_grade(1) {
                return Err(invalid("anchor and translation must be vectors"));
            }
        }
        Ok(Self { anchor, translation, rotation })
    }

    pub fn anchor(&self) -> &Multivector<S> {
        &self.anchor
    }

    pub fn translation(&self) -> &Multivector<S> {
        &self.translation
    }

    pub fn rotation(&self) -> &Rotor<S> {
        &self.rotation
    }

    pub fn apply(&self, p: &Multivector<S>) -> Result<Multivector<S>> {
        let rel = p.try_sub(&self.anchor)?;
        let moved = self.rotation.sandwich(&rel)?;
        moved.try_add(&self.anchor)?.try_add(&self.translation)
    }

    /// Squared coordinate distance between each moved point and its target.
    pub fn residuals(&self, points: &[Multivector<S>], images: &[Multivector<S>]) -> Result<Vec<S>> {
        if points.len() != images.len() {
            return Err(invalid("points and images differ in number"));
        }
        points
            .iter()
            .zip(images)
            .map(|(p, q)| Ok(self.apply(p)?.try_sub(q)?.coefficient_norm_sq()))
            .collect()
    }
}

fn close<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>, domain: &ScalarDomain) -> bool {
    a.approx_eq(b, domain.tolerance())
}

fn negligible<S: Scalar>(a: &Multivector<S>, domain: &ScalarDomain) -> bool {
    close(a, &Multivector::zero(a.signature()), domain)
}

/// Recovers the rigid motion taking three non-collinear points of Cl(0,3)
/// to their images.
pub fn recover_rigid_motion<S: Scalar>(
    points: &[Multivector<S>; 3],
    images: &[Multivector<S>; 3],
    domain: &ScalarDomain,
) -> Result<RigidMotion<S>> {
    let sig = points[0].signature();
    require_3d(sig)?;
    for v in points.iter().chain(images) {
        if v.signature() != sig {
            return Err(Error::SignatureMismatch(sig, v.signature()));
        }
        if !v.is_grade(1) {
            return Err(invalid("points must be vectors"));
        }
    }
    let [pa, pb, pc] = points;
    let [qa, qb, qc] = images;
    let a = pb - pa;
    let b = pc - pa;
    let a1 = qb - qa;
    let b1 = qc - qa;
    if negligible(&a.wedge(&b)?, domain) {
        return Err(Error::DegenerateConfiguration);
    }
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let before = square(&(&points[j] - &points[i]));
        let after = square(&(&images[j] - &images[i]));
        if !domain.eq(&before, &after) {
            return Err(Error::NotRigid(i, j));
        }
    }

    let da = &a - &a1;
    let db = &b - &b1;
    let mut m = cross(&da, &db)?;
    let rotation = if negligible(&m, domain) && negligible(&da, domain) && negligible(&db, domain) {
        Rotor::identity(sig)
    } else {
        if negligible(&m, domain) {
            // the displacements are parallel, so the axis is whatever
            // combination of a and b they leave fixed
            m = if negligible(&da, domain) {
                a.clone()
            } else if negligible(&db, domain) {
                b.clone()
            } else {
                let lambda = da.dot(&db)?.scalar_part()
                    * db.dot(&db)?.scalar_part().inv().ok_or_else(|| invalid("b is a null vector"))?;
                &a - &b.scale(&lambda)
            };
        }
        let (mut c, mut c1) = (project_onto_plane(&a, &m)?, project_onto_plane(&a1, &m)?);
        if negligible(&c, domain) {
            c = project_onto_plane(&b, &m)?;
            c1 = project_onto_plane(&b1, &m)?;
        }
        let d = &c + &c1;
        if negligible(&d, domain) {
            half_turn(&m)?
        } else {
            Rotor::new(&d * &c)?
        }
    };

    if !close(&rotation.sandwich(&a)?, &a1, domain) || !close(&rotation.sandwich(&b)?, &b1, domain) {
        return Err(Error::Improper);
    }
    RigidMotion::new(pa.clone(), qa - pa, rotation)
}

/// An observer: origin and orientation relative to a fixed reference.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame<S = Rational> {
    origin: Multivector<S>,
    orientation: Rotor<S>,
}

impl<S: Scalar> Frame<S> {
    pub fn new(origin: Multivector<S>, orientation: Rotor<S>) -> Result<Self> {
        if origin.signature() != orientation.signature() {
            return Err(Error::SignatureMismatch(origin.signature(), orientation.signature()));
        }
        if !origin.is_grade(1) {
            return Err(invalid("frame origin must be a vector"));
        }
        Ok(Self { origin, orientation })
    }

    pub fn reference(sig: Signature) -> Self {
        Self { origin: Multivector::zero(sig), orientation: Rotor::identity(sig) }
    }

    pub fn origin(&self) -> &Multivector<S> {
        &self.origin
    }

    pub fn orientation(&self) -> &Rotor<S> {
        &self.orientation
    }
}

/// Re-expresses `a`, measured in `from`, in the coordinates of `to`. The
/// vector part is treated as a point and shifted by the origin difference;
/// every grade is then turned by the relative orientation.
pub fn change_frame<S: Scalar>(from: &Frame<S>, to: &Frame<S>, a: &Multivector<S>) -> Result<Multivector<S>> {
    let sig = a.signature();
    for f in [from, to] {
        if f.origin.signature() != sig {
            return Err(Error::SignatureMismatch(sig, f.origin.signature()));
        }
    }
    let shift = from.orientation.inverse().sandwich(&from.origin.try_sub(&to.origin)?)?;
    let relative = compose(&to.orientation.inverse(), &from.orientation)?;
    relative.sandwich(&a.try_add(&shift)?)
}

/// Sum of squared coordinates of a vector, independent of the metric.
pub fn coordinate_length_sq<S: Scalar>(v: &Multivector<S>) -> S {
    v.grade_part(1).coefficient_norm_sq()
}
