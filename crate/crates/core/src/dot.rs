//! Graphviz export of colored finite circulants.

use std::fmt::Write;

use crate::circulant::{Coloring, DistanceSet, FiniteColoring};
use crate::error::{invalid, Error, Result};

/// Fill colors for colors 1, 2, ...; cycles past the end.
pub const PALETTE: [&str; 12] = [
    "gold",
    "royalblue",
    "firebrick",
    "forestgreen",
    "darkorange",
    "mediumpurple",
    "turquoise",
    "hotpink",
    "sienna",
    "gray60",
    "olivedrab",
    "navy",
];

/// Largest order rendered.
pub const MAX_DOT_ORDER: usize = 4096;

/// One node per vertex and one edge line per pair `(v, d)`, `d` in `D`, so a
/// double edge appears as two parallel lines and each vertex has degree
/// `2|D|` counting loops twice.
pub fn export_dot(coloring: &FiniteColoring, dset: &DistanceSet) -> Result<String> {
    let t = coloring.order();
    if t > MAX_DOT_ORDER {
        return Err(Error::ResourceLimit {
            what: "DOT rendering".into(),
            required: format!("{t} vertices"),
            budget: MAX_DOT_ORDER as u64,
        });
    }
    if t == 0 {
        return invalid("empty coloring");
    }
    let mut out = String::new();
    writeln!(out, "graph \"Ci_{t}({dset})\" {{").unwrap();
    writeln!(out, "  layout=circo;").unwrap();
    writeln!(out, "  node [style=filled, shape=circle];").unwrap();
    for (v, &c) in coloring.word().iter().enumerate() {
        let fill = PALETTE[(c as usize - 1) % PALETTE.len()];
        writeln!(out, "  {v} [fillcolor={fill}, xlabel=\"{c}\"];").unwrap();
    }
    for v in 0..t {
        for &d in dset.distances() {
            writeln!(out, "  {v} -- {};", (v + d as usize) % t).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}
