//! Finite anneids (homogeneous parts of graded rings), their linearizations,
//! ideal lattices, moduloids and Brown–McCoy radicals, with generators and a
//! theorem suite for exhaustive verification on small instances.

pub mod anneid;
pub mod bitset;
pub mod catalog;
pub mod corpus;
pub mod error;
pub mod grades;
pub mod ideals;
pub mod moduloid;
pub mod properties;
pub mod quotient;
pub mod radicals;
pub mod ring;

pub use anneid::{AnneidDocument, Axiom, FiniteAnneid, Violation};
pub use bitset::BitSet;
pub use error::{Error, Result};
pub use grades::{Grade, GradeGroupoid};
pub use ideals::HomSubset;
pub use moduloid::FiniteModuloid;
pub use radicals::{Analysis, RadicalReport};
pub use ring::{FiniteRing, TableRing};

/// Size bounds applied to every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest anneid accepted, counting the zero element.
    pub max_elements: usize,
    /// Largest linearization `|Ā|` (and largest `Ī` searched).
    pub max_lin: usize,
    /// Largest ideal lattice enumerated.
    pub max_ideals: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 64,
            max_lin: ring::DEFAULT_MAX_LIN,
            max_ideals: ideals::DEFAULT_MAX_IDEALS,
        }
    }
}
