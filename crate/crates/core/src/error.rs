use thiserror::Error;

/// Failure taxonomy shared by every stage of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("coefficient field extension unsupported: {0}")]
    ExtensionUnsupported(String),

    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {0}")]
    ResourceExceeded(String),

    #[error("series truncation exceeded: {0}")]
    TruncationExceeded(String),

    #[error("germ is not finitely determined: {0}")]
    NotFinitelyDetermined(String),

    #[error("germ needs an override: {0}")]
    NeedsOverride(String),

    #[error("invalid override: {0}")]
    InvalidOverride(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("wrong component kind: {0}")]
    WrongKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;
