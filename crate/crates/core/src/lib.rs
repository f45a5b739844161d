//! Computation with finite involution semigroups: hermitian squares, the ω
//! closure, generated involution subsemigroups, and HS-stable involution
//! subsemigroups, with cross-checks between their different descriptions.
//!
//! Elements are indices `0..n` into a Cayley table and subsets are bit
//! vectors over that range. All operations are pure functions of immutable
//! inputs.

pub mod checks;
pub mod closure;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod hs;
pub mod morphic;
pub mod semigroup;
pub mod structure;
pub mod subset;

pub use closure::SubsetPredicateReport;
pub use error::{Error, Result};
pub use hs::{
    CosetCriterion, CosetWitness, HsStabilityReport, HsViolation, MainConditionsReport,
    ProblemOutcome, WitnessChain,
};
pub use morphic::{Congruence, GroupQuotient};
pub use semigroup::{Element, ElementTerm, InvolutionSemigroup, SemigroupFile};
pub use structure::ClassReport;
pub use subset::Subset;
