use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("{0} requires a nonempty polyhedron")]
    EmptyPolyhedron(&'static str),

    #[error("every part of the hull is empty; at least one part needs points")]
    EmptySum,

    #[error("{0} requires a feasible problem")]
    InfeasibleProblem(&'static str),

    #[error("point is outside the domain of the objective mapping")]
    NotInDomain,

    #[error("a minimizing direction must be nonzero")]
    ZeroDirection,

    #[error("constraint system is feasible but not invariant under cone generator {generator}")]
    NotConeInvariant { generator: String },

    #[error("index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{key}: {message}")]
    Format { key: String, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn dims(context: &'static str, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context,
            expected,
            found,
        }
    }

    pub(crate) fn format(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            key: key.into(),
            message: message.into(),
        }
    }
}
