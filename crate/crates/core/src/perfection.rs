//! Perfection checks and the necessary conditions every perfect coloring of
//! an odd circulant satisfies.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::circulant::{
    neighbor_color_counts, Color, ColorCounts, Coloring, ColoringKind, DistanceSet,
    ParameterMatrix, PeriodicColoring,
};
use crate::error::{invalid, Result};

/// Outcome of [`check_perfect`]: a parameter matrix, or two same-colored
/// vertices whose neighborhoods disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionVerdict {
    #[serde(rename = "perfect")]
    is_perfect: bool,
    matrix: Option<ParameterMatrix>,
    witness: Option<(usize, usize)>,
}

impl PerfectionVerdict {
    fn perfect(matrix: ParameterMatrix) -> Self {
        Self {
            is_perfect: true,
            matrix: Some(matrix),
            witness: None,
        }
    }

    fn imperfect(u: usize, v: usize) -> Self {
        Self {
            is_perfect: false,
            matrix: None,
            witness: Some((u, v)),
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.is_perfect
    }

    pub fn matrix(&self) -> Option<&ParameterMatrix> {
        self.matrix.as_ref()
    }

    pub fn into_matrix(self) -> Option<ParameterMatrix> {
        self.matrix
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        self.witness
    }
}

/// Decides perfection of a finite or periodic coloring on its circulant.
///
/// For a periodic coloring one period of vertices suffices: translation by
/// the period is an automorphism preserving the coloring.
pub fn check_perfect<C: Coloring + ?Sized>(coloring: &C, dset: &DistanceSet) -> PerfectionVerdict {
    let k = coloring.color_count();
    let word = coloring.word();
    let mut rows: Vec<Option<(usize, ColorCounts)>> = vec![None; k];
    for (v, &c) in word.iter().enumerate() {
        let counts = neighbor_color_counts(coloring, dset, v as i64);
        match &rows[c as usize - 1] {
            None => rows[c as usize - 1] = Some((v, counts)),
            Some((first, row)) if *row != counts => {
                return PerfectionVerdict::imperfect(*first, v);
            }
            Some(_) => {}
        }
    }
    let mut entries = Vec::with_capacity(k * k);
    for row in rows {
        // validated colorings are surjective
        let (_, counts) = row.expect("every color occurs");
        entries.extend(counts.0);
    }
    PerfectionVerdict::perfect(ParameterMatrix::from_flat(k, entries))
}

fn parity_color_sets<C: Coloring + ?Sized>(coloring: &C) -> (Vec<u32>, Vec<u32>) {
    let k = coloring.color_count();
    let len = coloring.len();
    // one full period of both parity classes
    let span = if len.is_multiple_of(2) { len } else { 2 * len };
    let mut even = vec![0u32; k];
    let mut odd = vec![0u32; k];
    for i in 0..span {
        let c = coloring.color_at(i as i64) as usize - 1;
        if i % 2 == 0 {
            even[c] += 1;
        } else {
            odd[c] += 1;
        }
    }
    (even, odd)
}

/// True iff the colors on even and on odd vertices form disjoint sets.
pub fn is_bipartite_coloring<C: Coloring + ?Sized>(
    coloring: &C,
    dset: &DistanceSet,
) -> Result<bool> {
    if !dset.all_odd() {
        return invalid(format!("circulant with distances {dset} is not bipartite"));
    }
    if coloring.kind() == ColoringKind::Finite && coloring.len() % 2 == 1 {
        return invalid(format!(
            "Ci_{}({dset}) has odd order and is not bipartite",
            coloring.len()
        ));
    }
    let (even, odd) = parity_color_sets(coloring);
    Ok(even.iter().zip(&odd).all(|(&e, &o)| e == 0 || o == 0))
}

/// Either the coloring is bipartite or every color occurs equally often on
/// even and odd positions of one period.
pub fn check_even_odd_balance<C: Coloring + ?Sized>(coloring: &C) -> Result<bool> {
    if coloring.len() % 2 == 1 {
        return invalid(format!(
            "parity classes are ill-defined for odd length {}",
            coloring.len()
        ));
    }
    let (even, odd) = parity_color_sets(coloring);
    let bipartite = even.iter().zip(&odd).all(|(&e, &o)| e == 0 || o == 0);
    Ok(bipartite || even == odd)
}

/// Outer degrees of a perfect 2-coloring of `Ci_inf(D_n)`: `b` is the number of
/// color-2 neighbors of a color-1 vertex, `c` the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OuterDegrees {
    pub b: u32,
    pub c: u32,
    pub n: usize,
}

impl OuterDegrees {
    pub fn from_matrix(matrix: &ParameterMatrix, n: usize) -> Result<Self> {
        if matrix.order() != 2 {
            return invalid(format!(
                "outer degrees need a 2x2 matrix, got order {}",
                matrix.order()
            ));
        }
        if matrix.row_sums().iter().any(|&s| s as usize != 2 * n) {
            return invalid(format!("matrix {matrix} does not have row sums {}", 2 * n));
        }
        Ok(Self {
            b: matrix.get(1, 2),
            c: matrix.get(2, 1),
            n,
        })
    }

    pub fn sum(&self) -> u32 {
        self.b + self.c
    }

    pub fn matrix(&self) -> ParameterMatrix {
        let deg = 2 * self.n as u32;
        ParameterMatrix::from_flat(2, vec![deg - self.b, self.b, self.c, deg - self.c])
    }
}

/// The four matrix families admissible for 2-colorings of `Ci_inf(D_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TemplateShape {
    /// `b + c = 4n`: `((0,2n),(2n,0))`.
    Bipartite,
    /// `b + c = 2n`: `((c,b),(c,b))`.
    Equal,
    /// `b + c = 2n+1`: `((c-1,b),(c,b-1))`.
    PlusOne,
    /// `b + c = 2n-1`: `((c+1,b),(c,b+1))`.
    MinusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTemplate {
    pub n: usize,
    pub sum: u32,
    pub shape: TemplateShape,
    /// Values of `b` for which `b` and `c = sum - b` are both positive and the
    /// matrix entries are nonnegative. May be empty (`2n-1` at `n = 1`).
    pub b_range: RangeInclusive<u32>,
}

impl MatrixTemplate {
    pub fn matrix(&self, b: u32) -> Option<ParameterMatrix> {
        if !self.b_range.contains(&b) {
            return None;
        }
        let c = self.sum - b;
        let rows = match self.shape {
            TemplateShape::Bipartite => [0, b, c, 0],
            TemplateShape::Equal => [c, b, c, b],
            TemplateShape::PlusOne => [c - 1, b, c, b - 1],
            TemplateShape::MinusOne => [c + 1, b, c, b + 1],
        };
        Some(ParameterMatrix::from_flat(2, rows.to_vec()))
    }

    pub fn matrices(&self) -> impl Iterator<Item = ParameterMatrix> + '_ {
        self.b_range.clone().filter_map(|b| self.matrix(b))
    }
}

/// Families with `b + c` in `{4n, 2n, 2n+1, 2n-1}`, in that order.
pub fn admissible_matrix_templates(n: usize) -> Vec<MatrixTemplate> {
    let m = 2 * n as u32;
    let template = |sum, shape, b_range| MatrixTemplate {
        n,
        sum,
        shape,
        b_range,
    };
    vec![
        template(2 * m, TemplateShape::Bipartite, m..=m),
        template(m, TemplateShape::Equal, 1..=m - 1),
        template(m + 1, TemplateShape::PlusOne, 1..=m),
        // empty at n = 1
        template(m - 1, TemplateShape::MinusOne, 1..=m.saturating_sub(2)),
    ]
}

fn perfect_two_coloring(coloring: &PeriodicColoring, n: usize) -> Result<OuterDegrees> {
    if coloring.color_count() != 2 {
        return invalid(format!(
            "expected a 2-coloring, got {} colors",
            coloring.color_count()
        ));
    }
    let dset = DistanceSet::odd(n)?;
    let verdict = check_perfect(coloring, &dset);
    match verdict.matrix() {
        Some(m) => OuterDegrees::from_matrix(m, n),
        None => invalid(format!("{coloring} is not perfect on Ci_inf({dset})")),
    }
}

/// First `i` in one period violating the local neighborhood patterns, if any.
pub fn local_pattern_violation(coloring: &PeriodicColoring, n: usize) -> Result<Option<i64>> {
    let deg = perfect_two_coloring(coloring, n)?;
    let s = deg.sum() as usize;
    let n = n as i64;
    let at = |i: i64| coloring.color_at(i);
    for i in 0..coloring.period() as i64 {
        let (x, x2) = (at(i), at(i + 2));
        let (left, right) = (at(i - 2 * n + 1), at(i + 2 * n + 1));
        let ok = if x == x2 {
            left == right
        } else if s == 2 * n as usize + 1 {
            left == x2 && right == x
        } else if s == 2 * n as usize - 1 {
            left == x && right == x2
        } else {
            true
        };
        if !ok {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Whether a perfect 2-coloring of `Ci_inf(D_n)` follows the local patterns
/// forced around two vertices at distance 2.
pub fn check_local_patterns(coloring: &PeriodicColoring, n: usize) -> Result<bool> {
    Ok(local_pattern_violation(coloring, n)?.is_none())
}

/// The period length the outer-degree sum forces on a perfect 2-coloring.
pub fn claimed_period_length(deg: &OuterDegrees) -> Option<usize> {
    let n = deg.n;
    match deg.sum() as usize {
        s if s == 4 * n => Some(2),
        s if s == 2 * n => Some(4 * n),
        s if s == 2 * n + 1 => Some(2 * n + 1),
        s if s + 1 == 2 * n => Some(2 * n - 1),
        _ => None,
    }
}

/// Tests `phi(i) = phi(i + L)` for the claimed period `L`. Divisibility, not
/// minimality.
pub fn check_period_length_claim(coloring: &PeriodicColoring, n: usize) -> Result<bool> {
    let deg = perfect_two_coloring(coloring, n)?;
    let Some(l) = claimed_period_length(&deg) else {
        return Ok(false);
    };
    Ok(l % coloring.period() == 0)
}

/// Colors used on even positions of one period, ascending.
pub fn even_part_colors<C: Coloring + ?Sized>(coloring: &C) -> Vec<Color> {
    let (even, _) = parity_color_sets(coloring);
    (1..=even.len() as Color)
        .filter(|&c| even[c as usize - 1] > 0)
        .collect()
}
