use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameters {0} and {1} are not coprime")]
    NotCoprime(i64, i64),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("closure is not a knot ({0} components)")]
    NotAKnot(usize),

    #[error("letter {letter} out of range for a braid on {strands} strands")]
    BadLetter { letter: i32, strands: usize },

    #[error("malformed braid text: {0}")]
    Parse(String),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("modular reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("oracle budget of {budget} Alexander computations exhausted")]
    BudgetExhausted { budget: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
