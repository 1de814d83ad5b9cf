//! Enumeration and invariants of numerical semigroups.
//!
//! The semigroup tree is walked depth first with per-node decomposition
//! counters ([`tree`]); Kunz coordinates give an independent count of
//! semigroups by multiplicity and genus ([`kunz`]); [`lab`] holds the finite
//! checks of the counting identities and conjectures that are run over the
//! enumerated census.

pub mod closed_forms;
pub mod error;
pub mod kunz;
pub mod lab;
pub mod record;
pub mod semigroup;
pub mod table;
pub mod tree;

pub use error::{Error, Result};
pub use kunz::KunzVector;
pub use semigroup::{GeneratorTag, NumericalSemigroup, Partition, Strength, WeightData};
pub use tree::{enumerate, CensusTable, Collector, EnumConfig, TreeFrame};
