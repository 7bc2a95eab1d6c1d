use std::path::PathBuf;

use serde_json::json;

/// Failures surfaced by the command line tool.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or malformed input files.
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    /// The input is well formed but the mathematics refuses it.
    #[error("{message}")]
    Domain { kind: &'static str, message: String, detail: serde_json::Value },
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn domain(kind: &'static str, message: impl Into<String>) -> Self {
        CliError::Domain { kind, message: message.into(), detail: serde_json::Value::Null }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain { .. } => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Read { .. } => "read",
            CliError::Write { .. } => "write",
            CliError::Domain { kind, .. } => kind,
        }
    }

    /// The machine-readable form written to stderr.
    pub fn to_json(&self) -> serde_json::Value {
        let mut body = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::Domain { detail, .. } = self {
            if !detail.is_null() {
                body["detail"] = detail.clone();
            }
        }
        json!({ "error": body })
    }
}

impl From<qclifford_core::Error> for CliError {
    fn from(e: qclifford_core::Error) -> Self {
        use qclifford_core::Error as E;
        let kind = match &e {
            E::Parse(_) | E::ZeroDenominator => return CliError::Usage(e.to_string()),
            E::InvalidArgument(_) => "InvalidArgument",
            E::Inexact => "Inexact",
            E::SignatureMismatch(..) => "SignatureMismatch",
            E::BladeOutOfRange { .. } => "BladeOutOfRange",
            E::UnsupportedSignature(_) => "UnsupportedSignature",
            E::AmbiguousRotation => "AmbiguousRotation",
            E::DegenerateConfiguration => "DegenerateConfiguration",
            E::NotRigid(..) => "NotRigid",
            E::Improper => "Improper",
            E::SuperluminalVelocity => "SuperluminalVelocity",
            E::UnsupportedRepresentation { .. } => "UnsupportedRepresentation",
            E::EuclideanMetric(_) => "EuclideanMetric",
        };
        CliError::domain(kind, e.to_string())
    }
}
