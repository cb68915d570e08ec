use std::fmt;

use thiserror::Error;

use crate::sentence::Sentence;

/// A syntax error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SyntaxError {}

/// All syntax errors found in one input, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseErrors(pub Vec<SyntaxError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseErrors {}

impl From<SyntaxError> for ParseErrors {
    fn from(e: SyntaxError) -> Self {
        ParseErrors(vec![e])
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseErrors),

    #[error("theory too large: {size} sentences exceeds the limit of {limit}")]
    TheoryTooLarge { size: usize, limit: usize },

    #[error("specifying set is not a subset of the theory (e.g. {0})")]
    NotSubset(Sentence),

    #[error("premise set is not conflict-free")]
    NotConflictFree,

    #[error("argument is not a subset of the theory (e.g. {0})")]
    NotDeltaArgument(Sentence),

    #[error("not a Dung theory: {0} is neither an atom nor of the form a -> ~b")]
    NotDungTheory(Sentence),

    #[error("attack references unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("annotation needs exactly one extension, found {0}")]
    NotUniquelyInterpreted(usize),

    #[error("no contrary known for non-atomic justification {0}")]
    NoContrary(Sentence),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
