//! Exact Clifford algebra over the rationals.
//!
//! Multivectors of Cl(p,q) with up to six generators, rotors and rigid
//! motions in two and three dimensions, Lorentz boosts in Cl(1,3), the small
//! matrix representations of the low-dimensional algebras, and inversion of
//! spacetime multivectors through 2×2 quaternion matrices.
//!
//! ```
//! use qclifford_core::{Multivector, Signature};
//!
//! let sig: Signature = "Cl(0,2)".parse().unwrap();
//! let x = Multivector::<qclifford_core::Rational>::parse(sig, "e1").unwrap();
//! let y = Multivector::parse(sig, "e2").unwrap();
//! assert_eq!((&x * &y).to_string(), "1*e12");
//! ```
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod invertibility;
pub mod quaternion;
pub mod reps;
pub mod rotor;
pub mod scalar;
pub mod spacetime;

pub use algebra::{
    blade_product, quaternion_triads, square_census, Blade, CayleyTable, Multivector, Signature,
};
pub use error::{Error, Result};
pub use scalar::{measure_ratio, Mode, Rational, Ring, Scalar, ScalarDomain};
