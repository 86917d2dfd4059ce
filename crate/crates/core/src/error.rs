use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants fall in two families: malformed input (bad documents, shapes,
/// unknown vertices) and violated preconditions (a Hard Lefschetz input that
/// is not an isomorphism, a cycle that cannot be lifted). The command line
/// front end maps them to different exit codes, see [`Error::is_precondition`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("not a chain complex: boundary composite {0} is nonzero")]
    NotAComplex(String),

    #[error("chain map does not commute with boundaries in degree {0}")]
    NotAChainMap(usize),

    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),

    #[error("vertex '{0}' already exists")]
    VertexExists(String),

    #[error("duplicate simplex {0}")]
    DuplicateSimplex(String),

    #[error("simplex {0} is not in the complex")]
    MissingSimplex(String),

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("chain of degree {expected} given a simplex of dimension {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("perversity is evaluated on codimensions >= 2, got {0}")]
    CodimTooSmall(usize),

    #[error("perversity {name} is not defined at codimension {codim}")]
    PerversityUndefined { name: String, codim: usize },

    #[error("invalid perversity: {0}")]
    InvalidPerversity(String),

    #[error("invalid stratified complex: {0}")]
    InvalidComplex(String),

    #[error("empty complex")]
    EmptyComplex,

    #[error("allowability transfer fails at simplex {simplex}: {reason}")]
    TransferFails { simplex: String, reason: String },

    #[error("complex is not orientable along codimension-0 adjacencies (conflict at face {0})")]
    NonOrientable(String),

    #[error("fundamental chain is not a cycle away from the singular set (face {0})")]
    NotACycle(String),

    #[error("lift fails at flag step {step}: the link obstruction does not vanish")]
    LiftFailed { step: usize },

    #[error("cycle is not cone-shaped near apex '{0}'; apply one barycentric subdivision first")]
    NotConeShaped(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("Hard Lefschetz precondition: {0}")]
    HardLefschetz(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at {field}: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    /// True for errors that mean "the input is well formed but the
    /// requested conclusion cannot be drawn from it".
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::HardLefschetz(_)
                | Error::Precondition(_)
                | Error::NotConeShaped(_)
                | Error::LiftFailed { .. }
                | Error::TransferFails { .. }
                | Error::NonOrientable(_)
                | Error::NotACycle(_)
                | Error::NotAChainMap(_)
                | Error::InvalidComplex(_)
                | Error::CodimTooSmall(_)
        )
    }

    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
