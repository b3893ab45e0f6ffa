use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("digon between {0} and {1}; an orientation is required")]
    Digon(usize, usize),

    #[error("{what} is {actual}, above the configured cap of {limit}{hint}")]
    CapExceeded {
        what: &'static str,
        limit: u128,
        actual: u128,
        hint: &'static str,
    },

    #[error("average degree is undefined on an empty vertex set")]
    EmptyVertexSet,

    #[error("colouring covers {given} of {expected} vertices")]
    PartialColouring { given: usize, expected: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("extraction failed: {0}")]
    ExtractionFailed(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: impl Into<u128>, actual: impl Into<u128>) -> Self {
        Error::CapExceeded {
            what,
            limit: limit.into(),
            actual: actual.into(),
            hint: "",
        }
    }

    pub(crate) fn cap_with_hint(
        what: &'static str,
        limit: impl Into<u128>,
        actual: impl Into<u128>,
        hint: &'static str,
    ) -> Self {
        Error::CapExceeded {
            what,
            limit: limit.into(),
            actual: actual.into(),
            hint,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
