use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("group mismatch: expected {expected}, found {found}")]
    GroupMismatch { expected: String, found: String },

    #[error("group {0} is not cyclic")]
    NotCyclic(String),

    #[error("{0} is not a generator")]
    NotGenerator(String),

    #[error("homomorphism is not well defined: generator {index} has image of order not dividing its order")]
    IllDefinedHom { index: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: &'static str, cap: u64 },

    /// A checked statement failed on a concrete instance.
    #[error("falsified: {0}")]
    Falsified(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::Falsified(_))
    }
}
