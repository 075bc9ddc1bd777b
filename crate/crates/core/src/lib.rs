//! Perfect colorings of circulant graphs `Ci_t(D)` and `Ci_inf(D)` with odd
//! distance sets `D_n = {1, 3, ..., 2n-1}`: verification, explicit
//! constructions, exhaustive enumeration and the induced-set comparison.

pub mod circulant;
pub mod constructors;
pub mod dot;
pub mod enumeration;
mod error;
pub mod perfection;
pub mod verification;

pub use circulant::{
    Color, Coloring, ColoringKind, DistanceSet, FiniteColoring, ParameterMatrix, PeriodicColoring,
};
pub use error::{Error, Result};
