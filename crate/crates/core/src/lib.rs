//! Peak-preserving bijections between pattern-avoiding involutions, and the
//! machinery to check Motzkin-number enumerations of alternating and
//! reverse alternating involutions exhaustively.
//!
//! The pieces compose in one direction:
//!
//! * [`perm`]: permutations, patterns, symmetries, peaks.
//! * [`tableaux`]: RSK for involutions, West's rank bijection, `η` and `γ`.
//! * [`fillings`]: Young diagrams, transversals and `χ`.
//! * [`matchings`]: matchings, oscillating tableaux and `φ`.
//! * [`paths`]: noncrossing Dyck pairs, `ψ`, `ψ̄`, `α`, `β`, `θ`.
//! * [`pipeline`]: `Ψ` and `Φ`.
//! * [`enumeration`] and [`verify`]: generators, counts, reports.

pub mod enumeration;
pub mod error;
pub mod fillings;
pub mod matchings;
pub mod paths;
pub mod perm;
pub mod pipeline;
pub mod step;
pub mod tableaux;
pub mod verify;

pub use enumeration::{count_avoiders, generate, motzkin, BaseClass, ClassSpec, Family};
pub use error::{Error, Result};
pub use fillings::{Transversal, YoungDiagram};
pub use matchings::{Matching, OscillatingTableau};
pub use paths::DyckPair;
pub use perm::Permutation;
pub use step::{Step, StepWord};
pub use tableaux::{Partition, StandardYoungTableau};
pub use verify::{verify, Target, VerificationReport};
