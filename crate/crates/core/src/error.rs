use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring context must have at least one variable and positive weights: {0}")]
    InvalidContext(String),
    #[error("monomials or ideals live in different rings")]
    ContextMismatch,
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("monomial {0} is not squarefree")]
    NotSquarefree(Monomial),
    #[error("cannot build an ideal from an empty generator set")]
    EmptyGenerators,
    #[error("generator {generator} has degree {degree}, expected {expected}")]
    WrongDegree {
        generator: Monomial,
        degree: u32,
        expected: u32,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {0} vertices; at most 64 are supported")]
    GraphTooLarge(usize),
    #[error("not linear quotients at position {position}: colon generator {witness} is not a variable")]
    NotLinearQuotients { position: usize, witness: Monomial },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("linear type verdict contradicts the graph criterion: {0}")]
    Contradiction(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("empty Betti table")]
    EmptyTable,
}

pub type Result<T> = std::result::Result<T, Error>;
