use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight not starrable: {0}")]
    NotStarrable(String),
    #[error("weight type has no boolean complement")]
    NotBoolean,
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("exploration cap exceeded: {found} states (limit {limit})")]
    CapExceeded { found: usize, limit: usize },
    #[error("non-positive configuration: negated state variable")]
    NonPositive,
    #[error("free variable in a closed evaluation")]
    FreeVariable,
    #[error("tree is not nullary")]
    NotNullary,
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
