use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient or exponent left the representable range.
    #[error("coefficient overflow in Laurent arithmetic")]
    Overflow,

    /// A division that must be exact left a remainder.
    #[error("inexact polynomial division")]
    InexactDivision,

    /// Textual input could not be parsed. `line` is 1-based; for
    /// single-line inputs it carries the byte offset instead.
    #[error("parse error at {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Applying a ladder move pushed a weight entry outside 0..n.
    #[error("move {step} kills the program: column {col} leaves 0..{n}")]
    Killed { step: usize, col: usize, n: usize },

    /// The greedy placement could not find enough addable components.
    #[error("greedy placement stuck at step {step}: {found} addable components, {needed} needed")]
    GreedyStuck {
        step: usize,
        found: usize,
        needed: usize,
    },

    /// Two programs do not share the boundary data required by a pairing.
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    /// The evaluation state space exceeded the configured guard.
    #[error("resource guard: more than {limit} live shapes")]
    ResourceExhausted { limit: usize },

    /// Structurally invalid input (bad shapes, colors, words, placements).
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
