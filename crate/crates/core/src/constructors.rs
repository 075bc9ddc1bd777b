//! Explicit perfect colorings: the periods of the infinite path, and the
//! colorings of `Ci_t(D_n)` for `t = 4n` (complete bipartite `K_{2n,2n}`),
//! `t = 4n+2` (`K_{2n+1,2n+1}` minus a perfect matching) and `t = 4n-2`
//! (`K_{2n-1,2n-1}` plus a perfect matching).

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::circulant::{Color, Coloring, DistanceSet, FiniteColoring, PeriodicColoring};
use crate::enumeration::Budget;
use crate::error::{invalid, Result};
use crate::perfection::{check_perfect, is_bipartite_coloring};

/// The perfect colorings of the infinite path with `k` colors, deduplicated:
/// `[1 2 .. k]`, `[k .. 2 1 2 .. k-1]`, `[k .. 2 1 2 .. k]`, `[k .. 2 1 1 2 .. k]`.
pub fn path_colorings(k: usize) -> Result<Vec<PeriodicColoring>> {
    if k == 0 || k > Color::MAX as usize {
        return invalid(format!("k = {k} out of range 1..=255"));
    }
    let k = k as Color;
    let down: Vec<Color> = (1..=k).rev().collect();
    let templates = [
        (1..=k).collect::<Vec<_>>(),
        down.iter().copied().chain(2..k).collect(),
        down.iter().copied().chain(2..=k).collect(),
        down.iter().copied().chain(1..=k).collect(),
    ];
    let set: BTreeSet<PeriodicColoring> = templates
        .into_iter()
        .map(|w| PeriodicColoring::new(w, k as usize))
        .collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// Interleaves part words onto `Ci_{4n}(D_n)`: `even[i]` at vertex `2i`,
/// `odd[i]` at `2i+1`.
///
/// Accepted when the parts use disjoint color sets (bipartite) or carry the
/// same number of vertices of every color.
pub fn construct_4n(n: usize, k: usize, even: &[Color], odd: &[Color]) -> Result<FiniteColoring> {
    if n == 0 {
        return invalid("n must be positive");
    }
    if even.len() != 2 * n || odd.len() != 2 * n {
        return invalid(format!(
            "each part of Ci_{}(D_{n}) has {} vertices",
            4 * n,
            2 * n
        ));
    }
    let disjoint = even.iter().all(|c| !odd.contains(c));
    let balanced = even
        .iter()
        .copied()
        .sorted()
        .eq(odd.iter().copied().sorted());
    if !disjoint && !balanced {
        return invalid("parts neither use disjoint colors nor carry equal color counts");
    }
    let word = even.iter().interleave(odd).copied().collect();
    FiniteColoring::new(word, k)
}

/// How colors are grouped for the matching-based constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum ColorSplit {
    /// `monochrome` colors sit on both ends of a matching edge; each swap
    /// pair `{x, y}` is used crosswise on pairs of edges.
    NonBipartite {
        monochrome: BTreeSet<Color>,
        swap_pairs: Vec<(Color, Color)>,
    },
    /// `(even color, odd color)`: a bijection between the two parts' colors.
    Bipartite { pairs: Vec<(Color, Color)> },
}

impl ColorSplit {
    fn colors(&self) -> Vec<Color> {
        match self {
            ColorSplit::NonBipartite {
                monochrome,
                swap_pairs,
            } => monochrome
                .iter()
                .copied()
                .chain(swap_pairs.iter().flat_map(|&(x, y)| [x, y]))
                .collect(),
            ColorSplit::Bipartite { pairs } => pairs.iter().flat_map(|&(x, y)| [x, y]).collect(),
        }
    }

    /// Number of colors; the split must cover `1..=k` exactly once.
    pub fn color_count(&self) -> Result<usize> {
        let colors = self.colors();
        let k = colors.len();
        let distinct: BTreeSet<Color> = colors.iter().copied().collect();
        if distinct.len() != k {
            return invalid("a color appears twice in the split");
        }
        if distinct != (1..=k as Color).collect() {
            return invalid(format!("split colors {distinct:?} are not 1..={k}"));
        }
        if let ColorSplit::NonBipartite { swap_pairs, .. } = self {
            if swap_pairs.iter().any(|&(x, y)| x == y) {
                return invalid("a swap pair needs two distinct colors");
            }
        }
        Ok(k)
    }
}

/// Two matching edges colored crosswise: the first gets `colors.0` on its even
/// end and `colors.1` on its odd end, the second the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedEdges {
    pub first: usize,
    pub second: usize,
    pub colors: (Color, Color),
}

/// Assignment of colors to the edges of the perfect matching
/// `{(i, i+m) : 0 <= i < m}`, `m = t/2`; edge `i` is the one starting at `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingSplit {
    /// `(edge, color)`: both endpoints get the color.
    #[serde(default)]
    pub monochrome: Vec<(usize, Color)>,
    #[serde(default)]
    pub crossed: Vec<CrossedEdges>,
    /// Bipartite splits: `(edge, index into ColorSplit::Bipartite::pairs)`.
    #[serde(default)]
    pub paired: Vec<(usize, usize)>,
}

fn matching_ends(i: usize, m: usize) -> (usize, usize) {
    if i.is_multiple_of(2) {
        (i, i + m)
    } else {
        (i + m, i)
    }
}

fn construct_on_matching(
    m: usize,
    split: &ColorSplit,
    msplit: &MatchingSplit,
) -> Result<FiniteColoring> {
    let k = split.color_count()?;
    let mut word: Vec<Option<Color>> = vec![None; 2 * m];
    let mut assign = |edge: usize, even_color: Color, odd_color: Color| -> Result<()> {
        if edge >= m {
            return invalid(format!("matching has edges 0..{m}, got {edge}"));
        }
        let (e, o) = matching_ends(edge, m);
        if word[e].is_some() {
            return invalid(format!("edge {edge} is assigned twice"));
        }
        word[e] = Some(even_color);
        word[o] = Some(odd_color);
        Ok(())
    };
    match split {
        ColorSplit::NonBipartite {
            monochrome,
            swap_pairs,
        } => {
            if !msplit.paired.is_empty() {
                return invalid("paired edges need a bipartite split");
            }
            for &(edge, c) in &msplit.monochrome {
                if !monochrome.contains(&c) {
                    return invalid(format!("monochrome edge {edge} uses color {c} outside C1"));
                }
                assign(edge, c, c)?;
            }
            for x in &msplit.crossed {
                let (a, b) = x.colors;
                if !swap_pairs.iter().any(|&p| p == (a, b) || p == (b, a)) {
                    return invalid(format!("crossed colors ({a},{b}) are not a swap pair"));
                }
                assign(x.first, a, b)?;
                assign(x.second, b, a)?;
            }
        }
        ColorSplit::Bipartite { pairs } => {
            if !msplit.monochrome.is_empty() || !msplit.crossed.is_empty() {
                return invalid("a bipartite split colors every edge with a pair");
            }
            for &(edge, p) in &msplit.paired {
                let Some(&(e, o)) = pairs.get(p) else {
                    return invalid(format!("pair index {p} out of range"));
                };
                assign(edge, e, o)?;
            }
        }
    }
    let word: Vec<Color> = word
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or(v))
        .collect::<std::result::Result<_, usize>>()
        .or_else(|v| invalid(format!("vertex {v} lies on an unassigned edge")))?;
    FiniteColoring::new(word, k)
}

/// Coloring of `Ci_{4n+2}(D_n)` from a color split and a matching split.
pub fn construct_4n_plus_2(
    n: usize,
    split: &ColorSplit,
    msplit: &MatchingSplit,
) -> Result<FiniteColoring> {
    if n == 0 {
        return invalid("n must be positive");
    }
    construct_on_matching(2 * n + 1, split, msplit)
}

/// Coloring of `Ci_{4n-2}(D_n)`; the matching edges are double edges here.
pub fn construct_4n_minus_2(
    n: usize,
    split: &ColorSplit,
    msplit: &MatchingSplit,
) -> Result<FiniteColoring> {
    if n == 0 {
        return invalid("n must be positive");
    }
    construct_on_matching(2 * n - 1, split, msplit)
}

/// Every coloring `construct_4n` produces with `k` colors.
pub fn all_constructions_4n(n: usize, k: usize) -> Result<Vec<FiniteColoring>> {
    if n == 0 || k == 0 {
        return invalid("need n >= 1 and k >= 1");
    }
    let part = 2 * n;
    let words: Vec<Vec<Color>> = (0..part)
        .map(|_| 1..=k as Color)
        .multi_cartesian_product()
        .collect();
    let mut out = BTreeSet::new();
    for even in &words {
        for odd in &words {
            if let Ok(c) = construct_4n(n, k, even, odd) {
                out.insert(c);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// An involution of the colors as (fixed colors, 2-cycles).
type Involution = (Vec<Color>, Vec<(Color, Color)>);

/// Involutions of `1..=k`.
fn color_involutions(k: usize) -> Vec<Involution> {
    fn go(
        rest: &[Color],
        fixed: &mut Vec<Color>,
        pairs: &mut Vec<(Color, Color)>,
        out: &mut Vec<Involution>,
    ) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push((fixed.clone(), pairs.clone()));
            return;
        };
        fixed.push(first);
        go(tail, fixed, pairs, out);
        fixed.pop();
        for (i, &partner) in tail.iter().enumerate() {
            let remaining: Vec<Color> = tail
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &c)| c)
                .collect();
            pairs.push((first, partner));
            go(&remaining, fixed, pairs, out);
            pairs.pop();
        }
    }
    let colors: Vec<Color> = (1..=k as Color).collect();
    let mut out = Vec::new();
    go(&colors, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Every coloring the matching recipe produces on `Ci_{2m}(D_n)` with `k`
/// colors, over all color splits and matching splits.
fn all_matching_constructions(m: usize, k: usize) -> Result<Vec<FiniteColoring>> {
    let mut out = BTreeSet::new();

    #[derive(Clone, Copy)]
    enum EdgeKind {
        Mono(Color),
        Cross(Color, Color),
    }

    for (fixed, pairs) in color_involutions(k) {
        let kinds: Vec<EdgeKind> = fixed
            .iter()
            .map(|&c| EdgeKind::Mono(c))
            .chain(
                pairs
                    .iter()
                    .flat_map(|&(x, y)| [EdgeKind::Cross(x, y), EdgeKind::Cross(y, x)]),
            )
            .collect();
        let split = ColorSplit::NonBipartite {
            monochrome: fixed.iter().copied().collect(),
            swap_pairs: pairs.clone(),
        };
        for choice in (0..m).map(|_| 0..kinds.len()).multi_cartesian_product() {
            let mut msplit = MatchingSplit::default();
            let mut forward: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
            let mut backward: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
            for (edge, &kind) in choice.iter().enumerate() {
                match kinds[kind] {
                    EdgeKind::Mono(c) => msplit.monochrome.push((edge, c)),
                    EdgeKind::Cross(x, y) => {
                        let p = pairs
                            .iter()
                            .position(|&q| q == (x, y) || q == (y, x))
                            .unwrap();
                        if pairs[p] == (x, y) {
                            forward[p].push(edge);
                        } else {
                            backward[p].push(edge);
                        }
                    }
                }
            }
            if forward
                .iter()
                .zip(&backward)
                .any(|(f, b)| f.len() != b.len())
            {
                continue;
            }
            for (p, (f, b)) in forward.iter().zip(&backward).enumerate() {
                for (&first, &second) in f.iter().zip(b) {
                    msplit.crossed.push(CrossedEdges {
                        first,
                        second,
                        colors: pairs[p],
                    });
                }
            }
            // fails exactly when some color is unused
            if let Ok(c) = construct_on_matching(m, &split, &msplit) {
                out.insert(c);
            }
        }
    }

    if k.is_multiple_of(2) {
        let half = k / 2;
        for even_colors in (1..=k as Color).combinations(half) {
            let odd_colors: Vec<Color> = (1..=k as Color)
                .filter(|c| !even_colors.contains(c))
                .collect();
            for odd_perm in odd_colors.iter().copied().permutations(half) {
                let pairs: Vec<(Color, Color)> =
                    even_colors.iter().copied().zip(odd_perm).collect();
                let split = ColorSplit::Bipartite { pairs };
                for choice in (0..m).map(|_| 0..half).multi_cartesian_product() {
                    let msplit = MatchingSplit {
                        paired: choice.into_iter().enumerate().collect(),
                        ..Default::default()
                    };
                    if let Ok(c) = construct_on_matching(m, &split, &msplit) {
                        out.insert(c);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

pub fn all_constructions_4n_plus_2(n: usize, k: usize) -> Result<Vec<FiniteColoring>> {
    if n == 0 || k == 0 {
        return invalid("need n >= 1 and k >= 1");
    }
    all_matching_constructions(2 * n + 1, k)
}

pub fn all_constructions_4n_minus_2(n: usize, k: usize) -> Result<Vec<FiniteColoring>> {
    if n == 0 || k == 0 {
        return invalid("need n >= 1 and k >= 1");
    }
    all_matching_constructions(2 * n - 1, k)
}

/// The two families of perfect 2-colorings of `Ci_{4n±2}(D_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColorCases {
    /// Every matching edge monochrome, both colors used.
    pub monochrome_matching: Vec<FiniteColoring>,
    /// The two labelings of the bipartite coloring.
    pub bipartite: Vec<FiniteColoring>,
}

impl TwoColorCases {
    pub fn all(&self) -> impl Iterator<Item = &FiniteColoring> {
        self.monochrome_matching.iter().chain(&self.bipartite)
    }

    pub fn len(&self) -> usize {
        self.monochrome_matching.len() + self.bipartite.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn two_color_cases(n: usize, t: usize) -> Result<TwoColorCases> {
    if n == 0 || (t != 4 * n + 2 && t + 2 != 4 * n) {
        return invalid(format!("t = {t} is neither 4n+2 nor 4n-2 for n = {n}"));
    }
    let m = t / 2;
    let mut monochrome_matching = Vec::new();
    for colors in (0..m).map(|_| 1..=2 as Color).multi_cartesian_product() {
        let mut word = vec![0; t];
        for (edge, &c) in colors.iter().enumerate() {
            let (e, o) = matching_ends(edge, m);
            word[e] = c;
            word[o] = c;
        }
        if let Ok(c) = FiniteColoring::new(word, 2) {
            monochrome_matching.push(c);
        }
    }
    monochrome_matching.sort();
    let bipartite = [[1, 2], [2, 1]]
        .iter()
        .map(|pat| FiniteColoring::new((0..t).map(|v| pat[v % 2]).collect(), 2))
        .collect::<Result<_>>()?;
    Ok(TwoColorCases {
        monochrome_matching,
        bipartite,
    })
}

/// Number of labeled non-bipartite perfect colorings of `Ci_{4n}(D_n)` with
/// `counts[j]` vertices of color `j+1` in each part, by exhaustive search.
pub fn count_nonbipartite_4n(n: usize, k: usize, counts: &[u32], budget: &Budget) -> Result<u64> {
    if n == 0 || counts.len() != k {
        return invalid(format!("need n >= 1 and {k} color counts"));
    }
    if counts.iter().sum::<u32>() as usize != 2 * n {
        return invalid(format!("color counts must sum to {}", 2 * n));
    }
    if counts.iter().filter(|&&m| m > 0).count() < 2 {
        return invalid("a non-bipartite count needs at least two colors");
    }
    let t = 4 * n;
    crate::enumeration::guarded_power(k, t, budget.words, "count_nonbipartite_4n")?;
    let dset = DistanceSet::odd(n)?;
    // relabel the colors in use to 1..=k' so words stay surjective
    let used: Vec<usize> = (0..k).filter(|&j| counts[j] > 0).collect();
    let used_k = used.len();
    let mut total = 0;
    for word in (0..t).map(|_| 0..used_k).multi_cartesian_product() {
        let mut even = vec![0u32; used_k];
        let mut odd = vec![0u32; used_k];
        for (v, &c) in word.iter().enumerate() {
            if v % 2 == 0 {
                even[c] += 1;
            } else {
                odd[c] += 1;
            }
        }
        let want: Vec<u32> = used.iter().map(|&j| counts[j]).collect();
        if even != want || odd != want {
            continue;
        }
        let coloring = FiniteColoring::new(word.iter().map(|&c| c as Color + 1).collect(), used_k)?;
        if check_perfect(&coloring, &dset).is_perfect() && !is_bipartite_coloring(&coloring, &dset)?
        {
            total += 1;
        }
    }
    Ok(total)
}

/// Condition that the even-to-odd color map along the matching edges is a
/// well-defined bijection.
pub fn matching_color_map_is_bijection(coloring: &FiniteColoring) -> bool {
    let t = coloring.len();
    if t % 2 == 1 {
        return false;
    }
    let m = t / 2;
    let mut forward = std::collections::BTreeMap::new();
    let mut backward = std::collections::BTreeMap::new();
    for edge in 0..m {
        let (e, o) = matching_ends(edge, m);
        let (ce, co) = (coloring.word()[e], coloring.word()[o]);
        if *forward.entry(ce).or_insert(co) != co || *backward.entry(co).or_insert(ce) != ce {
            return false;
        }
    }
    true
}
