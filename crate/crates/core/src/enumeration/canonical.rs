use std::str::FromStr;

use crate::circulant::word::{least_rotation, primitive_period};
use crate::circulant::Color;
use crate::error::{Error, Result};

/// Which symmetries to quotient by when canonicalizing a cyclic word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub rotation: bool,
    pub reflection: bool,
    pub colors: bool,
}

impl Symmetry {
    pub const NONE: Self = Self {
        rotation: false,
        reflection: false,
        colors: false,
    };
    pub const ROTATION: Self = Self {
        rotation: true,
        reflection: false,
        colors: false,
    };
    pub const ALL: Self = Self {
        rotation: true,
        reflection: true,
        colors: true,
    };

    pub fn is_trivial(&self) -> bool {
        *self == Self::NONE
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    /// Comma-separated subset of `rotation`, `reflection`, `colors`, or `none`.
    fn from_str(s: &str) -> Result<Self> {
        let mut sym = Symmetry::NONE;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "rotation" => sym.rotation = true,
                "reflection" => sym.reflection = true,
                "colors" | "color_permutation" => sym.colors = true,
                "none" => {}
                other => return Err(Error::Parse(format!("unknown symmetry '{other}'"))),
            }
        }
        Ok(sym)
    }
}

/// Relabel colors in order of first occurrence: the least image under color
/// permutations.
pub fn relabel_by_first_occurrence(word: &[Color]) -> Vec<Color> {
    let mut map = [0 as Color; 256];
    let mut next: Color = 1;
    word.iter()
        .map(|&c| {
            let slot = &mut map[c as usize];
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect()
}

/// Least image of a cyclic word under the selected symmetries, keeping its
/// full length. Reflection is `i -> -i`.
pub fn least_image(word: &[Color], sym: Symmetry) -> Vec<Color> {
    if word.is_empty() {
        return Vec::new();
    }
    if !sym.reflection && !sym.colors {
        return if sym.rotation {
            least_rotation(word)
        } else {
            word.to_vec()
        };
    }
    let n = word.len();
    let reflected: Vec<Color> = (0..n).map(|i| word[(n - i) % n]).collect();
    let mut bases = vec![word.to_vec()];
    if sym.reflection {
        bases.push(reflected);
    }
    let shifts = if sym.rotation { n } else { 1 };
    let mut best: Option<Vec<Color>> = None;
    for base in &bases {
        for s in 0..shifts {
            let rotated: Vec<Color> = base[s..].iter().chain(&base[..s]).copied().collect();
            let image = if sym.colors {
                relabel_by_first_occurrence(&rotated)
            } else {
                rotated
            };
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.expect("nonempty word has an image")
}

/// Primitive period first, then the least image under `sym`. Idempotent.
pub fn canonical_form(word: &[Color], sym: Symmetry) -> Vec<Color> {
    let p = primitive_period(word);
    least_image(&word[..p], sym)
}
