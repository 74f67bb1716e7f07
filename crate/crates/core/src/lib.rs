//! Exact computations on small matroids given by their bases: locked subsets and the
//! locked structure, the minimal facet description of the bases polytope with a
//! brute-force certificate, maximum-weight bases, and a uniformity test driven by the
//! locked number.

pub mod catalog;
pub mod connectivity;
pub mod error;
pub mod file;
pub mod locked;
pub mod matroid;
pub mod optimize;
pub mod polytope;
pub mod set;
pub mod uniformity;

/// Exact rational scalar used for weights and points.
pub type Rational = num_rational::BigRational;

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 24;

pub use catalog::CatalogEntry;
pub use error::{MatroidError, Result};
pub use file::MatroidFile;
pub use locked::{KLockedVerdict, LockedNumbers, LockedStructure};
pub use matroid::{Matroid, RankQuery};
pub use optimize::{OptimizationResult, WeightFunction};
pub use polytope::{
    CertificationReport, ConstraintOrigin, FacetSystem, LinearConstraint, Sense, TightSet,
};
pub use set::{ElementSet, GroundSet};
pub use uniformity::{UniformityCondition, UniformityVerdict};
