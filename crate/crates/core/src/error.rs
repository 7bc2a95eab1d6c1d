use alloc::string::String;

use crate::algebra::{Blade, Signature};

/// Everything that can go wrong in the algebra, kinematics and
/// representation layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("square root is not rational")]
    Inexact,
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("blade {blade:?} is not part of {signature}")]
    BladeOutOfRange { blade: Blade, signature: Signature },
    #[error("unsupported signature: {0}")]
    UnsupportedSignature(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vectors are antiparallel; the rotation plane is not determined (supply an axis)")]
    AmbiguousRotation,
    #[error("points are collinear")]
    DegenerateConfiguration,
    #[error("distance between points {0} and {1} is not preserved")]
    NotRigid(usize, usize),
    #[error("no proper rotation maps the points onto their images")]
    Improper,
    #[error("velocity is not below the speed of light")]
    SuperluminalVelocity,
    #[error("no catalogue representation of {signature} over {target}")]
    UnsupportedRepresentation { signature: Signature, target: String },
    #[error("rigid-body operations require an anti-Euclidean signature, got {0}")]
    EuclideanMetric(Signature),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
