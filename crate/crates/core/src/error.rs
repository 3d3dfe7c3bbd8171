use serde::Serialize;
use thiserror::Error;

/// Everything that can go wrong in the library. Each variant has a stable
/// machine-readable code (see [`Error::code`]) used by the CLI and the C ABI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid formed space: {0}")]
    InvalidSpace(String),
    #[error("formed spaces of different type: {0}")]
    MismatchedType(String),
    #[error("{inner} does not embed in {outer}")]
    NotEmbeddable { inner: String, outer: String },
    #[error("row {row} carries a multiplicity form of the wrong sign")]
    BadSign { row: usize },
    #[error("rows do not reassemble the ambient space: got {got}, expected {expected}")]
    NotAdmissible { got: String, expected: String },
    #[error("bad tableau shape: {0}")]
    BadShape(String),
    #[error("base-field dimension {dim} exceeds the bound {bound}")]
    BoundExceeded { dim: usize, bound: usize },
    #[error("closure order between real orbits is not modeled")]
    UnsupportedRealClosure,
    #[error("spaces do not form a dual pair: {0}")]
    IncompatiblePair(String),
    #[error("orbit is not in the image of the moment map")]
    NotInImage,
    #[error("no orbit descends to the given orbit")]
    EmptyLift,
    #[error("closure-maximal lift is not unique: {0}")]
    AmbiguousMaximum(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not in the Lie algebra of the form")]
    NotInAlgebra,
    #[error("dimension identity violated: {0}")]
    IdentityViolated(String),
    #[error("orbits are not a descent pair: {0}")]
    NotDescentPair(String),
    #[error("cycles live over different data: {0}")]
    IncomparableSupports(String),
    #[error("dim° of the space is not positive")]
    NonpositiveDimCirc,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidSpace(_) => "InvalidSpace",
            Error::MismatchedType(_) => "MismatchedType",
            Error::NotEmbeddable { .. } => "NotEmbeddable",
            Error::BadSign { .. } => "BadSign",
            Error::NotAdmissible { .. } => "NotAdmissible",
            Error::BadShape(_) => "BadShape",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::UnsupportedRealClosure => "UnsupportedRealClosure",
            Error::IncompatiblePair(_) => "IncompatiblePair",
            Error::NotInImage => "NotInImage",
            Error::EmptyLift => "EmptyLift",
            Error::AmbiguousMaximum(_) => "AmbiguousMaximum",
            Error::NotNilpotent => "NotNilpotent",
            Error::NotInAlgebra => "NotInAlgebra",
            Error::IdentityViolated(_) => "IdentityViolated",
            Error::NotDescentPair(_) => "NotDescentPair",
            Error::IncomparableSupports(_) => "IncomparableSupports",
            Error::NonpositiveDimCirc => "NonpositiveDimCirc",
            Error::Unsupported(_) => "Unsupported",
            Error::Parse(_) => "Parse",
        }
    }

    /// Malformed input as opposed to a well-posed question with a negative
    /// answer. The CLI maps the former to exit code 1 and the latter to 2.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidSpace(_))
    }

    pub fn to_object(&self) -> ErrorObject {
        let context = match self {
            Error::BadSign { row } => serde_json::json!({ "row": row }),
            Error::BoundExceeded { dim, bound } => serde_json::json!({ "dim": dim, "bound": bound }),
            Error::NotEmbeddable { inner, outer } => {
                serde_json::json!({ "inner": inner, "outer": outer })
            }
            Error::NotAdmissible { got, expected } => {
                serde_json::json!({ "got": got, "expected": expected })
            }
            _ => serde_json::Value::Null,
        };
        ErrorObject {
            code: self.code().to_string(),
            message: self.to_string(),
            context,
        }
    }
}

/// Structured error as emitted on the wire.
#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq)]
pub struct ErrorObject {
    pub code: String,
    pub message: String,
    pub context: serde_json::Value,
}

pub type Result<T> = std::result::Result<T, Error>;
