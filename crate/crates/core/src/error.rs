use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} budget exceeded: needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("no closed-form counter for {0}")]
    NoCounter(String),
    #[error("no guarantee for null languages")]
    NullLanguage,
    #[error("malformed DFA document: {0}")]
    Document(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn budget(what: &'static str, needed: u128, limit: u128) -> Self {
        Error::BudgetExceeded {
            what,
            needed,
            limit,
        }
    }
}
