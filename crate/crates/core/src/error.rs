use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}({lhs}, {rhs}) overflows 64 bits")]
    Overflow {
        op: &'static str,
        lhs: u64,
        rhs: u64,
    },

    #[error("elements belong to different lattices ({left} vs {right})")]
    LatticeMismatch { left: String, right: String },

    #[error("element {0} does not belong to this lattice")]
    NotAnElement(String),

    #[error("lattice {0} is infinite; pass an explicit window to enumerate it")]
    Infinite(String),

    #[error("invalid lattice specification: {0}")]
    InvalidSpec(String),

    #[error("table violates {axiom} at {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("{0} does not divide {1}")]
    NotDivisor(u64, u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("map is not antitone at ({0}, {1})")]
    NotAntitone(String, String),

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
