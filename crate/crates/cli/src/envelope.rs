use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use knotorder_core::Error;

#[derive(Clone, Debug, Serialize)]
pub struct ErrorPayload {
    pub kind: &'static str,
    pub message: String,
}

impl ErrorPayload {
    pub fn new(kind: &'static str, message: impl Into<String>) -> Self {
        ErrorPayload {
            kind,
            message: message.into(),
        }
    }
}

impl From<&Error> for ErrorPayload {
    fn from(e: &Error) -> Self {
        let kind = match e {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Precondition(_) => "precondition",
            Error::Dimension(_) => "dimension",
            Error::NotDivisible(_) => "not-divisible",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::ZeroDeterminant(_) => "zero-determinant",
            Error::GeneratorOutOfRange { .. } => "generator-out-of-range",
            Error::MalformedDiagram(_) => "malformed-diagram",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
            Error::Singular(_) => "singular",
            Error::FieldMismatch { .. } => "field-mismatch",
            Error::Inconsistent(_) => "inconsistent",
        };
        ErrorPayload::new(kind, e.to_string())
    }
}

/// Everything printed in JSON mode. Only `timing_ms` varies between
/// identical invocations.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub inputs_sha256: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorPayload>,
    pub timing_ms: f64,
}

/// SHA-256 over the arguments and the bytes of every input file, each
/// length-prefixed.
pub fn inputs_hash(args: &[String], files: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    for a in args {
        h.update((a.len() as u64).to_le_bytes());
        h.update(a.as_bytes());
    }
    for f in files {
        h.update((f.len() as u64).to_le_bytes());
        h.update(f);
    }
    hex::encode(h.finalize())
}
