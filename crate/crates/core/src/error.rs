use thiserror::Error;

/// Errors produced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input could not be parsed. The message carries line or field context.
    #[error("parse error: {0}")]
    Parse(String),
    /// A structurally valid document violates a DFA invariant.
    #[error("invalid dfa ({field}): {message}")]
    InvalidDfa { field: String, message: String },
    #[error("unknown letter {0:?}")]
    UnknownLetter(char),
    #[error("unknown built-in {kind} {name:?}")]
    UnknownBuiltin { kind: &'static str, name: String },
    #[error("{what} exceeds the size cap: {needed} > {cap}")]
    SizeCap {
        what: &'static str,
        needed: usize,
        cap: usize,
    },
    #[error("invalid term: {0}")]
    Term(String),
    #[error("identity uses {0} variables, at most 3 are supported")]
    TooManyVariables(usize),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A built-in reduction was instantiated with parameters that break its side conditions.
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("monoid does not match automaton: {0}")]
    Mismatch(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("input is outside the declared domain: {0}")]
    OutOfDomain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
