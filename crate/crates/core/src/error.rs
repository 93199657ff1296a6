use thiserror::Error;

/// Errors raised by group arithmetic and labeling manipulation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CordialError {
    #[error("a group needs at least one cyclic factor")]
    EmptyGroup,
    #[error("cyclic factor {0} is invalid; every factor must be at least 2")]
    TrivialFactor(u64),
    #[error("group order overflows")]
    OrderOverflow,
    #[error("element has {got} residues but the group has {expected} factors")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("residue {residue} is out of range for factor {factor}")]
    ResidueOutOfRange { residue: u64, factor: u64 },
    #[error("index {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("labeling groups differ: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("a cycle needs at least three vertices, got {0}")]
    ShortCycle(usize),
    #[error("operation requires a path labeling")]
    NotAPath,
    #[error("operation requires a cycle labeling")]
    NotACycle,
    #[error("truncation length {t} is outside 1..={len}")]
    TruncateOutOfRange { t: usize, len: usize },
}

/// A parse failure with a 1-based line/column position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}
