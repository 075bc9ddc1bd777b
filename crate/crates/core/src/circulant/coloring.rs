use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{least_rotation, primitive_period};
use crate::error::{invalid, Result};

/// A color label, 1-based.
pub type Color = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringKind {
    Finite,
    Periodic,
}

/// A surjective coloring read cyclically: vertex `v` has color `word[v mod len]`.
///
/// For a finite coloring of `Ci_t(D)` the word has length `t`; for a periodic
/// coloring of `Ci_inf(D)` it is one period.
pub trait Coloring {
    fn word(&self) -> &[Color];
    fn color_count(&self) -> usize;
    fn kind(&self) -> ColoringKind;

    fn len(&self) -> usize {
        self.word().len()
    }

    fn is_empty(&self) -> bool {
        self.word().is_empty()
    }

    fn color_at(&self, v: i64) -> Color {
        let w = self.word();
        w[v.rem_euclid(w.len() as i64) as usize]
    }
}

fn validate_word(word: &[Color], k: usize) -> Result<()> {
    if word.is_empty() {
        return invalid("coloring word must be nonempty");
    }
    if k == 0 || k > Color::MAX as usize {
        return invalid(format!("color count {k} out of range 1..=255"));
    }
    let mut seen = vec![false; k];
    for &c in word {
        if c == 0 || c as usize > k {
            return invalid(format!("color {c} outside 1..={k}"));
        }
        seen[c as usize - 1] = true;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return invalid(format!("color {} of 1..={k} is never used", missing + 1));
    }
    Ok(())
}

/// Coloring of the finite circulant `Ci_t(D)`, `t = word.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteColoring {
    k: usize,
    word: Vec<Color>,
}

impl FiniteColoring {
    pub fn new(word: Vec<Color>, k: usize) -> Result<Self> {
        validate_word(&word, k)?;
        Ok(Self { k, word })
    }

    /// Infers `k` as the largest color present.
    pub fn from_word(word: Vec<Color>) -> Result<Self> {
        let k = word.iter().copied().max().unwrap_or(0) as usize;
        Self::new(word, k)
    }

    pub fn order(&self) -> usize {
        self.word.len()
    }

    pub fn into_word(self) -> Vec<Color> {
        self.word
    }
}

impl Coloring for FiniteColoring {
    fn word(&self) -> &[Color] {
        &self.word
    }

    fn color_count(&self) -> usize {
        self.k
    }

    fn kind(&self) -> ColoringKind {
        ColoringKind::Finite
    }
}

/// Periodic coloring of `Ci_inf(D)`, stored as the least rotation of its
/// primitive period.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicColoring {
    k: usize,
    word: Vec<Color>,
}

impl PeriodicColoring {
    pub fn new(word: Vec<Color>, k: usize) -> Result<Self> {
        validate_word(&word, k)?;
        let p = primitive_period(&word);
        let word = least_rotation(&word[..p]);
        Ok(Self { k, word })
    }

    pub fn from_word(word: Vec<Color>) -> Result<Self> {
        let k = word.iter().copied().max().unwrap_or(0) as usize;
        Self::new(word, k)
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    pub fn into_word(self) -> Vec<Color> {
        self.word
    }
}

impl Coloring for PeriodicColoring {
    fn word(&self) -> &[Color] {
        &self.word
    }

    fn color_count(&self) -> usize {
        self.k
    }

    fn kind(&self) -> ColoringKind {
        ColoringKind::Periodic
    }
}

pub(crate) fn fmt_word(word: &[Color], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let sep = if word.iter().any(|&c| c > 9) { "," } else { "" };
    write!(f, "[")?;
    for (i, c) in word.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

impl fmt::Display for FiniteColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word, f)
    }
}

impl fmt::Display for PeriodicColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word, f)
    }
}
