use thiserror::Error;

/// Errors raised by the snake-name library.
///
/// Positions carried by variants are 1-based, like every position the
/// library reports.
#[derive(Debug, Error)]
pub enum SnakeError {
    #[error("the empty word has no partition")]
    EmptyWord,

    #[error("word of length {len} is too short (need at least {min})")]
    TooShort { len: usize, min: usize },

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },

    #[error("letter {letter} occurs {count} times; binary reduction needs more than two")]
    NotReducible { letter: String, count: usize },

    #[error("letter {letter} occurs {count} times; deletion needs exactly two")]
    NotDeletable { letter: String, count: usize },

    #[error("parameters are not defined for the bubble snake name aa")]
    ParamsUndefined,

    #[error("{word} is not a snake name")]
    NotASnakeName { word: String },

    #[error("{word} is not a binary word")]
    NotBinary { word: String },

    #[error("insertion index {l} outside {min}..={max}")]
    BadInsertionIndex { l: usize, min: usize, max: usize },

    #[error("the model snake needs a snake name of length > 2, got length {len}")]
    ModelUndefined { len: usize },

    #[error("exponents must satisfy 1 <= beta < alpha (got beta={beta}, alpha={alpha})")]
    BadExponents { beta: String, alpha: String },

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("m = {m} exceeds the brute-force bound {bound}")]
    BoundExceeded { m: usize, bound: usize },

    #[error("invalid standard Young tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid cluster partition: {0}")]
    InvalidClusters(String),

    #[error("corrupt cache at line {line}: {reason}")]
    CorruptCache { line: usize, reason: String },

    #[error("integer overflow while counting")]
    Overflow,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = SnakeError> = std::result::Result<T, E>;
