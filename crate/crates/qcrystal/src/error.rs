use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> ParseError {
        ParseError { msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("operator {label} did not terminate after {cap} steps at {at}")]
    Runaway { label: String, cap: usize, at: String },
    #[error("component exceeded {cap} vertices")]
    TooLarge { cap: usize },
    #[error("category mismatch: {0}")]
    Category(String),
    #[error("rank mismatch: {0} vs {1}")]
    Rank(usize, usize),
    #[error("inconsistent nu_0 at {0}")]
    Nu(String),
    #[error("{0}")]
    Invalid(String),
}
