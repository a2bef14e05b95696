//! Executable model-category theory for small categories.
//!
//! Categories are given either by finite presentations ([`FpCategory`]) or by
//! explicit composition tables ([`FiniteCategory`]). On top of these the crate
//! decides the cofibration / equivalence / isofibration predicates, computes
//! pushouts and homotopy pushouts, builds spheres and CW-complexes, certifies
//! that classes vanish in K0 through the cone functor, and works with
//! constant sheaves of categories on finite topological spaces.

pub mod error;
pub mod fpcat;
pub mod colimits;
pub mod cw;
pub mod model;
pub mod ktheory;
pub mod sheaf;

pub use error::{Error, Result};
pub use fpcat::{
    Completion, FinFunctor, FiniteCategory, FpCategory, FpFunctor, Generator, Path, Relation, RewritingSystem,
};

/// Rule budget for completion.
pub const DEFAULT_BUDGET: usize = 500;
/// Maximum number of morphisms per hom-set when enumerating a finite model.
pub const DEFAULT_BOUND: usize = 64;
/// Maximum number of candidates examined by functor searches.
pub const DEFAULT_SEARCH_BOUND: u128 = 1_000_000;
