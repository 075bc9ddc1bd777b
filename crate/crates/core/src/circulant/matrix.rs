use std::fmt;

use serde::{Deserialize, Serialize};

use super::coloring::Color;
use crate::error::{invalid, Result};

/// Per-color counts over a neighbor multiset. Index `c - 1` holds color `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorCounts(pub Vec<u32>);

impl ColorCounts {
    pub fn zeros(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn get(&self, c: Color) -> u32 {
        self.0[c as usize - 1]
    }

    pub fn add(&mut self, c: Color) {
        self.0[c as usize - 1] += 1;
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// `m[i][j]`: number of color `j+1` neighbors of any color `i+1` vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct ParameterMatrix {
    k: usize,
    entries: Vec<u32>,
}

impl ParameterMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return invalid("parameter matrix must have at least one row");
        }
        if rows.iter().any(|r| r.len() != k) {
            return invalid("parameter matrix must be square");
        }
        Ok(Self {
            k,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_flat(k: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), k * k);
        Self { k, entries }
    }

    pub fn order(&self) -> usize {
        self.k
    }

    /// Row of color `c` (1-based).
    pub fn row(&self, c: Color) -> &[u32] {
        let i = c as usize - 1;
        &self.entries[i * self.k..(i + 1) * self.k]
    }

    /// Entry for colors `i`, `j` (1-based).
    pub fn get(&self, i: Color, j: Color) -> u32 {
        self.row(i)[j as usize - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.k)
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// Relabel colors by `perm`, which sends color `c` to `perm[c - 1]`.
    pub fn permute(&self, perm: &[Color]) -> Self {
        let k = self.k;
        let mut entries = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                let pi = perm[i] as usize - 1;
                let pj = perm[j] as usize - 1;
                entries[pi * k + pj] = self.entries[i * k + j];
            }
        }
        Self { k, entries }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }
}

impl TryFrom<Vec<Vec<u32>>> for ParameterMatrix {
    type Error = crate::Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<ParameterMatrix> for Vec<Vec<u32>> {
    fn from(m: ParameterMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Display for ParameterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}
