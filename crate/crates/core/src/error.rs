use thiserror::Error;

use crate::automaton::{StateId, Symbol};

/// Errors raised by automaton construction and by the pipeline stages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("state {state} out of range (automaton has {num_states} states)")]
    StateOutOfRange { state: StateId, num_states: usize },
    #[error("symbol index {symbol} out of range (alphabet has {size} symbols)")]
    SymbolOutOfRange { symbol: Symbol, size: usize },
    #[error("duplicate transition ({src}, {symbol}, {dst})")]
    DuplicateTransition {
        src: StateId,
        symbol: Symbol,
        dst: StateId,
    },
    #[error("automaton is not total: state {state} has no transition on symbol {symbol}")]
    NotTotal { state: StateId, symbol: Symbol },
    #[error("automaton has no states")]
    NoStates,
    #[error("input not safe-deterministic")]
    NotSafeDeterministic,
    #[error("automaton is not alpha-homogeneous")]
    NotAlphaHomogeneous,
    #[error("automaton is not good-for-games")]
    NotGfg,
    #[error("automata are over different alphabets")]
    AlphabetMismatch,
    #[error("invalid frontier: {0}")]
    InvalidFrontier(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A parse failure with the 1-based position where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("non-co-Büchi acceptance: {0}")]
    NonCoBuchi(String),
    #[error("unsupported feature: {0}")]
    Unsupported(String),
    #[error("missing header `{0}`")]
    MissingHeader(&'static str),
    #[error("invalid automaton: {0}")]
    Invalid(Box<Error>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
