//! Presentations, rewriting, and explicit finite categories.

mod finite;
mod functor;
mod path;
mod presentation;
mod rewriting;

pub use finite::{FiniteCategory, FiniteJson, FiniteModel, Morphism};
pub use functor::{FinFunctor, FpFunctor, FunctorJson};
pub use path::Path;
pub use presentation::{mate_name, FpBuilder, FpCategory, Generator, PresentationJson, Quiver, Relation};
pub use rewriting::{Completion, Normalized, RewritingSystem};
