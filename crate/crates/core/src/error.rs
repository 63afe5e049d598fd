use thiserror::Error;

/// Errors produced by graph construction, parsing and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {u} out of range for {n} vertices")]
    VertexOutOfRange { u: usize, n: usize },
    #[error("common neighborhood requested for an empty vertex set")]
    EmptyQuerySet,
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid counts: {0}")]
    InvalidCounts(String),
    #[error("invalid search parameters: {0}")]
    InvalidParams(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

impl Error {
    /// Machine-readable category name, stable across releases.
    pub fn category(&self) -> &'static str {
        match self {
            Error::SelfLoop(_) => "SelfLoop",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::EmptyQuerySet => "EmptyQuerySet",
            Error::MissingEdge(..) => "MissingEdge",
            Error::Parse { .. } => "ParseError",
            Error::InvalidCounts(_) => "InvalidCounts",
            Error::InvalidParams(_) => "InvalidParams",
            Error::EmptyGraph => "EmptyGraph",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::TooLarge { .. } => "TooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
