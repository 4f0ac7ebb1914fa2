use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    /// The search would exceed the configured level or cell budget.
    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity { what: &'static str, needed: u64, limit: u64 },

    #[error("morphism is not prolongable at `{0}`")]
    NotProlongable(char),

    #[error("morphism rule for `{0}` is erasing; only codings may erase letters")]
    ErasingRule(char),

    #[error("letter `{0}` is outside the alphabet")]
    UnknownLetter(char),

    #[error("word has only {found} occurrences of `{letter}`, need {needed}")]
    InsufficientLength { letter: char, needed: usize, found: usize },

    #[error("mex2 expects even elements, found {0}")]
    OddElement(u64),

    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("table has {len} entries, need {needed}")]
    ShortTable { len: usize, needed: usize },

    #[error("lookup index {index} out of range (available {available})")]
    LookupOutOfRange { index: u64, available: usize },
}
