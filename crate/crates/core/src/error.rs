use thiserror::Error;

use crate::symbol::OpSymbol;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol name {0:?}")]
    InvalidSymbol(String),

    #[error("word {word} contains non-commuting symbols {left} and {right}")]
    NonCommutingWord {
        word: String,
        left: OpSymbol,
        right: OpSymbol,
    },

    #[error("missing commutation hypothesis [{left}, {right}] = 0")]
    MissingHypothesis { left: OpSymbol, right: OpSymbol },

    #[error("symbol {0} has no concrete map assigned")]
    UnboundSymbol(OpSymbol),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("a derivation needs exactly two summands, found {0}")]
    Arity(usize),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("{0}")]
    Model(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            message: message.into(),
        }
    }
}
