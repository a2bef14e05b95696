use std::fmt;

use serde::{Deserialize, Serialize};

/// A composable string of generators, read left to right (first applied first).
///
/// `at` is the basepoint of the path; for a nonempty path it must equal the
/// source of the first generator, and for an empty path it names the object
/// whose identity the path denotes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub at: String,
    pub gens: Vec<String>,
}

impl Path {
    pub fn new<S, I, G>(at: S, gens: I) -> Self
    where
        S: Into<String>,
        I: IntoIterator<Item = G>,
        G: Into<String>,
    {
        Path {
            at: at.into(),
            gens: gens.into_iter().map(Into::into).collect(),
        }
    }

    pub fn id(at: impl Into<String>) -> Self {
        Path {
            at: at.into(),
            gens: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            write!(f, "id({})", self.at)
        } else {
            write!(f, "{}", self.gens.join(";"))
        }
    }
}

/// Index-level path used by the rewriting engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct IPath {
    pub at: usize,
    pub word: Vec<usize>,
}
