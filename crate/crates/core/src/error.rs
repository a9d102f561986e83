use thiserror::Error;

use crate::anneid::Violation;
use crate::grades::Grade;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed tables: {0}")]
    MalformedTables(String),
    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    AxiomViolation(Vec<Violation>),
    #[error("grade {0} is not idempotent")]
    NotIdempotent(Grade),
    #[error("structure of size {actual} exceeds limit {limit}")]
    SizeExceeded { actual: usize, limit: usize },
    #[error("ideal lattice exceeds {limit} members")]
    LatticeTooLarge { limit: usize },
    #[error("subset is not a two-sided ideal")]
    NotTwoSidedIdeal,
    #[error("subset is not a right ideal")]
    NotRightIdeal,
    #[error("ideal is not modular")]
    NotModular,
    #[error("unities modulo the ideal have different degrees")]
    DegreesDiffer,
    #[error("anneid is not regular")]
    NotRegular,
    #[error("classical Brown-McCoy algorithms disagree: {0}")]
    AlgorithmsDisagree(String),
    #[error("homogeneous part is not an ideal")]
    NotIdeal,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("random generation exhausted {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Whether the error comes from a configured size bound rather than bad input.
    pub fn is_bounds(&self) -> bool {
        matches!(
            self,
            Error::SizeExceeded { .. } | Error::LatticeTooLarge { .. }
        )
    }
}
