//! Multigraded Betti numbers of square-free monomial ideals attached to
//! uniform clutters, with a reduction calculus for simplicial elements and an
//! independent Hochster-formula oracle.
//!
//! Vertices are 1-based throughout. A clutter `C` on `[n]` is studied through
//! the ideal `I(C̄)` generated by the `d`-sets that are *not* circuits of `C`.

pub mod betti;
pub mod clutter;
pub mod complex;
pub mod error;
pub mod face;
pub mod fixtures;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod reduction;
pub mod sampling;
pub mod verify;

pub use betti::BettiTable;
pub use clutter::UniformClutter;
pub use complex::{FaceSet, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use homology::FieldSpec;
pub use ideal::SquarefreeMonomialIdeal;

use serde::{Deserialize, Serialize};

/// Default number of states a search may expand.
pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;

/// Verdict of a budgeted exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome<W> {
    Found(W),
    /// Proven: the full search space holds no witness.
    Refuted {
        reason: String,
    },
    /// The budget ran out before the space was exhausted.
    Unknown {
        explored: usize,
    },
}

impl<W> SearchOutcome<W> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, SearchOutcome::Refuted { .. })
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(W) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(w) => SearchOutcome::Found(f(w)),
            SearchOutcome::Refuted { reason } => SearchOutcome::Refuted { reason },
            SearchOutcome::Unknown { explored } => SearchOutcome::Unknown { explored },
        }
    }
}
