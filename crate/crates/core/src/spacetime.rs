//! Events and boosts in Cl(1,3), with `e0` the time direction.

use alloc::format;

use crate::algebra::{Blade, Multivector, Signature};
use crate::error::{invalid, Error, Result};
use crate::rotor::Rotor;
use crate::scalar::{Rational, Scalar, ScalarDomain};

/// The spacetime algebra Cl(1,3).
pub fn spacetime() -> Signature {
    Signature::new(1, 3).expect("four generators are supported")
}

/// A point of spacetime in length units: `ct e0 + x e1 + y e2 + z e3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Event<S = Rational> {
    pub ct: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Event<S> {
    pub fn new(ct: S, x: S, y: S, z: S) -> Self {
        Self { ct, x, y, z }
    }

    /// Builds an event from a time `t` and the speed of light `c`.
    pub fn from_time(t: S, x: S, y: S, z: S, c: &S) -> Result<Self> {
        if c.partial_cmp(&S::zero()) != Some(core::cmp::Ordering::Greater) {
            return Err(invalid("the speed of light must be positive"));
        }
        Ok(Self { ct: c.clone() * t, x, y, z })
    }

    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    /// Time coordinate `ct / c`.
    pub fn time(&self, c: &S) -> Result<S> {
        let inv = c.inv().ok_or_else(|| invalid("the speed of light must be positive"))?;
        Ok(self.ct.clone() * inv)
    }

    pub fn to_multivector(&self) -> Multivector<S> {
        Multivector::vector(
            spacetime(),
            &[self.ct.clone(), self.x.clone(), self.y.clone(), self.z.clone()],
        )
        .expect("four components")
    }

    pub fn from_multivector(mv: &Multivector<S>) -> Result<Self> {
        if mv.signature() != spacetime() {
            return Err(Error::SignatureMismatch(spacetime(), mv.signature()));
        }
        let c = mv.vector_coords()?;
        let [ct, x, y, z] = <[S; 4]>::try_from(c).map_err(|_| invalid("expected four components"))?;
        Ok(Self { ct, x, y, z })
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            ct: self.ct.clone() - other.ct.clone(),
            x: self.x.clone() - other.x.clone(),
            y: self.y.clone() - other.y.clone(),
            z: self.z.clone() - other.z.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            ct: self.ct.clone() + other.ct.clone(),
            x: self.x.clone() + other.x.clone(),
            y: self.y.clone() + other.y.clone(),
            z: self.z.clone() + other.z.clone(),
        }
    }

    /// `x²` under the geometric product: `(ct)² − x² − y² − z²`.
    pub fn square(&self) -> S {
        let v = self.to_multivector();
        (&v * &v).scalar_part()
    }
}

/// Invariant interval `(a − b)²` between two events.
pub fn interval_sq<S: Scalar>(a: &Event<S>, b: &Event<S>) -> S {
    a.sub(b).square()
}

/// True when the separation lies on the light cone.
pub fn is_lightlike<S: Scalar>(separation: &Event<S>, domain: &ScalarDomain) -> bool {
    domain.is_zero(&separation.square())
}

/// A change to a frame moving with velocity `beta` (in units of c). The
/// rotor is `ŝ₁(ŝ₁ + ŝ₂)` with `ŝ₁ = e0` and `ŝ₂ = γ(e0 + β)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Boost<S = Rational> {
    beta: [S; 3],
    gamma: S,
    rotor: Rotor<S>,
}

impl<S: Scalar> Boost<S> {
    /// Fails with [`Error::SuperluminalVelocity`] unless |β| < 1, and with
    /// [`Error::Inexact`] for rationals when 1 − β² is not a square.
    pub fn new(beta: [S; 3]) -> Result<Self> {
        let beta_sq = beta.iter().fold(S::zero(), |acc, b| acc + b.clone() * b.clone());
        if beta_sq >= S::one() {
            return Err(Error::SuperluminalVelocity);
        }
        let root = (S::one() - beta_sq).sqrt()?;
        let gamma = root.inv().ok_or(Error::SuperluminalVelocity)?;
        let sig = spacetime();
        let s1 = Multivector::basis(sig, 0)?;
        let s2 = Multivector::vector(
            sig,
            &[S::one(), beta[0].clone(), beta[1].clone(), beta[2].clone()],
        )?
        .scale(&gamma);
        let rotor = Rotor::new(&s1 * &(&s1 + &s2))?;
        Ok(Self { beta, gamma, rotor })
    }

    pub fn beta(&self) -> &[S; 3] {
        &self.beta
    }

    pub fn gamma(&self) -> &S {
        &self.gamma
    }

    pub fn rotor(&self) -> &Rotor<S> {
        &self.rotor
    }

    /// Coordinates of `p` in the moving frame.
    pub fn lorentz_transform(&self, p: &Event<S>) -> Result<Event<S>> {
        Event::from_multivector(&self.rotor.sandwich(&p.to_multivector())?)
    }

    /// Lorentz transformation followed by a shift of origin.
    pub fn poincare_transform(&self, offset: &Event<S>, p: &Event<S>) -> Result<Event<S>> {
        Ok(self.lorentz_transform(p)?.add(offset))
    }
}

/// Carries a rotor of Cl(0,3) into the spatial part of Cl(1,3).
pub fn embed_spatial_rotor<S: Scalar>(r: &Rotor<S>) -> Result<Rotor<S>> {
    let sig = r.signature();
    if sig != Signature::new(0, 3)? {
        return Err(Error::UnsupportedSignature(format!("expected Cl(0,3), got {sig}")));
    }
    let terms = r
        .versor()
        .terms()
        .map(|(b, c)| (Blade::from_bits(b.bits() << 1), c.clone()));
    Rotor::new(Multivector::from_terms(spacetime(), terms)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotor::rotor_from_vector_pair;
    use crate::scalar::q;

    fn ev(c: [&str; 4]) -> Event {
        Event::new(q(c[0]), q(c[1]), q(c[2]), q(c[3]))
    }

    fn beta(b: &str) -> Boost {
        Boost::new([q(b), q("0"), q("0")]).unwrap()
    }

    #[test]
    fn intervals() {
        let a = ev(["7", "1", "2", "3"]);
        assert_eq!(interval_sq(&a, &a), q("0"));
        let o = Event::origin();
        assert_eq!(interval_sq(&ev(["5", "3", "0", "0"]), &o), q("16"));
        assert_eq!(interval_sq(&ev(["1", "1", "0", "0"]), &o), q("0"));
        let d = ScalarDomain::exact();
        assert!(is_lightlike(&ev(["1", "1", "0", "0"]), &d));
        assert!(!is_lightlike(&ev(["1", "0", "0", "0"]), &d));
        assert!(is_lightlike(&ev(["5", "3", "4", "0"]), &d));
    }

    #[test]
    fn boost_construction() {
        let b = beta("0");
        assert_eq!(b.gamma(), &q("1"));
        assert!(b.rotor().versor().as_scalar().is_some());
        assert_eq!(beta("3/5").gamma(), &q("5/4"));
        assert_eq!(Boost::new([q("1"), q("0"), q("0")]), Err(Error::SuperluminalVelocity));
        assert_eq!(Boost::new([q("3/5"), q("4/5"), q("0")]), Err(Error::SuperluminalVelocity));
        assert_eq!(Boost::new([q("1/2"), q("0"), q("0")]), Err(Error::Inexact));
        let approx = Boost::new([0.5f64, 0.0, 0.0]).unwrap();
        assert!((approx.gamma() - 2.0 / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn lorentz_examples() {
        let b = beta("3/5");
        assert_eq!(b.lorentz_transform(&ev(["5", "3", "0", "0"])).unwrap(), ev(["4", "0", "0", "0"]));
        let p = ev(["2", "-1", "7", "1/3"]);
        assert_eq!(beta("0").lorentz_transform(&p).unwrap(), p);
        let moved = b.lorentz_transform(&p).unwrap();
        assert_eq!((moved.y.clone(), moved.z.clone()), (p.y.clone(), p.z.clone()));
        assert_eq!(interval_sq(&moved, &Event::origin()), interval_sq(&p, &Event::origin()));
    }

    #[test]
    fn poincare_examples() {
        let b = beta("3/5");
        let p = ev(["5", "3", "0", "0"]);
        assert_eq!(b.poincare_transform(&Event::origin(), &p).unwrap(), b.lorentz_transform(&p).unwrap());
        assert_eq!(b.poincare_transform(&ev(["1", "1", "1", "1"]), &p).unwrap(), ev(["5", "1", "1", "1"]));
        let shift = ev(["3", "0", "0", "0"]);
        assert_eq!(beta("0").poincare_transform(&shift, &p).unwrap(), ev(["8", "3", "0", "0"]));
    }

    #[test]
    fn time_units() {
        let c = q("3");
        let e = Event::from_time(q("2"), q("1"), q("0"), q("0"), &c).unwrap();
        assert_eq!(e.ct, q("6"));
        assert_eq!(e.time(&c).unwrap(), q("2"));
        assert!(Event::from_time(q("2"), q("1"), q("0"), q("0"), &q("0")).is_err());
    }

    #[test]
    fn spatial_rotor_embedding() {
        let s3 = Signature::new(0, 3).unwrap();
        let r = rotor_from_vector_pair(
            &Multivector::parse(s3, "e1").unwrap(),
            &Multivector::parse(s3, "e2").unwrap(),
        )
        .unwrap();
        let r4 = embed_spatial_rotor(&r).unwrap();
        let p = ev(["9", "1", "0", "5"]);
        let turned = Event::from_multivector(&r4.sandwich(&p.to_multivector()).unwrap()).unwrap();
        assert_eq!(turned, ev(["9", "0", "1", "5"]));
    }
}
