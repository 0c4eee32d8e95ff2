use thiserror::Error;

use crate::construction::Classification;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field context mismatch: D={0} vs D={1}")]
    FieldMismatch(u64, u64),

    #[error("invalid field discriminant D={0}: expected 0 or a square-free integer > 1")]
    InvalidField(u64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("degenerate cut: the hyperplane does not meet the interior of the polytope")]
    DegenerateCut,

    #[error("invalid quasilattice: {0}")]
    InvalidQuasilattice(String),

    #[error("normal of facet {facet} is not a member of the quasilattice")]
    NotInQuasilattice { facet: usize },

    #[error("certificate mismatch for facet {facet}")]
    CertificateMismatch { facet: usize },

    #[error("degenerate triple: {0}")]
    DegenerateTriple(String),

    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),

    #[error("construction refused: polytope is {}", .0.summary())]
    Refused(Box<Classification>),

    #[error("cannot inflate beyond seed")]
    CannotInflate,

    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
