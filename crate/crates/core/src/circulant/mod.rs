//! Circulant graphs, colorings and parameter matrices.

mod coloring;
mod distance;
mod graph;
mod json;
mod matrix;
pub mod word;

pub use coloring::{Color, Coloring, ColoringKind, FiniteColoring, PeriodicColoring};
pub use distance::{make_odd_distance_set, DistanceSet};
pub use graph::{
    covering_reduction, finite_offsets, infinite_offsets, neighbor_color_counts, neighbor_offsets,
    verify_covering, FiniteCirculant, Order,
};
pub use json::{AnyColoring, ColoringDoc};
pub use matrix::{ColorCounts, ParameterMatrix};
