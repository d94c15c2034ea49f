use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid structure-constant table: {0}")]
    InvalidTable(String),

    #[error("operands belong to different algebras")]
    MismatchedTables,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
}
