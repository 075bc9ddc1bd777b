//! Complete enumeration of perfect colorings.
//!
//! Finite circulants are searched by backtracking; the infinite circulant
//! `Ci_inf(D_n)` by following the forced window extension for every candidate
//! parameter matrix and collecting the cycles.

mod automaton;
mod canonical;
mod finite;

use serde::Serialize;

pub use automaton::{
    all_row_sum_matrices, candidate_matrices, enumerate_periodic_perfect, step_window, Automaton,
    Step, WindowState,
};
pub use canonical::{canonical_form, least_image, relabel_by_first_occurrence, Symmetry};
pub use finite::enumerate_perfect_finite;

use crate::circulant::ParameterMatrix;
use crate::error::{Error, Result};

/// Search limits. `words` caps `k^t` for finite searches, `states` caps
/// `k^(4n-1)` window states per matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub words: u64,
    pub states: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            words: 1 << 30,
            states: 1 << 24,
        }
    }
}

pub(crate) fn guarded_power(base: usize, exp: usize, budget: u64, what: &str) -> Result<u64> {
    let limit = || Error::ResourceLimit {
        what: what.to_string(),
        required: format!("{base}^{exp}"),
        budget,
    };
    let value = (base as u64).checked_pow(exp as u32).ok_or_else(limit)?;
    if value > budget {
        return Err(Error::ResourceLimit {
            what: what.to_string(),
            required: format!("{base}^{exp} = {value}"),
            budget,
        });
    }
    Ok(value)
}

/// A coloring found by a search, with its parameter matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Found<C> {
    pub coloring: C,
    pub matrix: ParameterMatrix,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub matrices_tried: u64,
    pub states_explored: u64,
    pub cycles_found: u64,
}

/// Search output, sorted by word and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult<C> {
    pub colorings: Vec<Found<C>>,
    pub stats: EnumerationStats,
}

impl<C> EnumerationResult<C> {
    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &C> {
        self.colorings.iter().map(|f| &f.coloring)
    }
}
