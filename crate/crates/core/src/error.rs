use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("index {index} out of range 1..={bound}")]
    OutOfRange { index: usize, bound: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("not a member: {0}")]
    NotMember(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("configuration is not in the colimit domain: cubes {p} and {q} overlap")]
    NotInDomain { p: usize, q: usize },

    #[error("budget exceeded: {what} would exceed the limit of {limit}")]
    Budget { what: &'static str, limit: usize },

    #[error("not a poset: {0}")]
    NotAPoset(String),

    #[error("not a functor: {0}")]
    NotFunctorial(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
