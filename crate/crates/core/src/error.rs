use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// The pair does not act transitively. Components are 0-based dart sets.
    #[error("hypermap is not transitive: {} connected components", components.len())]
    NotTransitive { components: Vec<Vec<usize>> },

    #[error("invalid special dart set: {0}")]
    InvalidSpecialDarts(String),

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// H_X * H_Z^T != 0. Never produced for valid hypermap input.
    #[error("CSS commutation failure: {0}")]
    CommutationFailure(String),

    #[error("{n} qubits exceeds the exhaustive distance search cap of {cap}")]
    TooManyQubits { n: usize, cap: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
