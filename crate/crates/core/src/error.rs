use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at r = {r}, s = {s}")]
    PoleAtPoint { r: String, s: String },
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("weight height {height} exceeds the configured limit {limit}")]
    HeightExceeded { height: usize, limit: usize },
    #[error("illegal letter: {0}")]
    IllegalLetter(String),
    #[error("incompatible parents: {0}")]
    IncompatibleParents(String),
    #[error("element is not weight-homogeneous")]
    NotHomogeneous,
    #[error("Gram matrix is singular at weight {0}")]
    SingularGram(String),
    #[error("operation requires type {expected}, got {got}")]
    WrongType { expected: String, got: String },
    #[error("module depth {depth} exceeds the limit {limit}")]
    DepthExceeded { depth: usize, limit: usize },
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
