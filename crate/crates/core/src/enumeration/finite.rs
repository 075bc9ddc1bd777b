use std::collections::BTreeSet;

use itertools::Itertools;

use super::canonical::least_image;
use super::{guarded_power, Budget, EnumerationResult, EnumerationStats, Found, Symmetry};
use crate::circulant::{finite_offsets, Color, DistanceSet, FiniteColoring};
use crate::error::{invalid, Result};
use crate::perfection::check_perfect;

/// Backtracking over vertices `0..t` in order. A vertex is checked as soon as
/// it and all of its neighbors are colored; colors are introduced in
/// first-occurrence order and expanded by permutation afterwards.
struct Search {
    t: usize,
    k: usize,
    offsets: Vec<usize>,
    check_at: Vec<Vec<usize>>,
    word: Vec<u8>,
    rows: Vec<Option<Vec<u32>>>,
    found: Vec<Vec<u8>>,
    nodes: u64,
}

impl Search {
    fn new(t: usize, k: usize, offsets: Vec<usize>) -> Self {
        let mut check_at = vec![Vec::new(); t];
        for u in 0..t {
            let ready = offsets.iter().map(|o| (u + o) % t).fold(u, usize::max);
            check_at[ready].push(u);
        }
        Self {
            t,
            k,
            offsets,
            check_at,
            word: vec![0; t],
            rows: vec![None; k],
            found: Vec::new(),
            nodes: 0,
        }
    }

    fn counts(&self, u: usize) -> Vec<u32> {
        let mut counts = vec![0; self.k];
        for o in &self.offsets {
            counts[self.word[(u + o) % self.t] as usize] += 1;
        }
        counts
    }

    /// Checks every vertex completed by coloring `v`; returns the colors whose
    /// rows were fixed here, or `None` on a contradiction.
    fn check(&mut self, v: usize) -> Option<Vec<usize>> {
        let mut fixed = Vec::new();
        for i in 0..self.check_at[v].len() {
            let u = self.check_at[v][i];
            let counts = self.counts(u);
            let c = self.word[u] as usize;
            match &self.rows[c] {
                Some(row) if *row != counts => {
                    for &f in &fixed {
                        self.rows[f] = None;
                    }
                    return None;
                }
                Some(_) => {}
                None => {
                    self.rows[c] = Some(counts);
                    fixed.push(c);
                }
            }
        }
        Some(fixed)
    }

    fn run(&mut self, v: usize, used: usize) {
        self.nodes += 1;
        if v == self.t {
            if used == self.k {
                self.found.push(self.word.clone());
            }
            return;
        }
        let remaining = self.t - v - 1;
        for c in 0..(used + 1).min(self.k) {
            let now_used = used.max(c + 1);
            if self.k - now_used > remaining {
                continue;
            }
            self.word[v] = c as u8;
            if let Some(fixed) = self.check(v) {
                self.run(v + 1, now_used);
                for f in fixed {
                    self.rows[f] = None;
                }
            }
        }
    }
}

/// All surjective perfect `k`-colorings of `Ci_t(D)`, optionally reduced
/// modulo the circulant's rotations and reflection and/or color permutations.
///
/// Reduced results hold the least image of each orbit.
pub fn enumerate_perfect_finite(
    t: usize,
    dset: &DistanceSet,
    k: usize,
    sym: Symmetry,
    budget: &Budget,
) -> Result<EnumerationResult<FiniteColoring>> {
    if t == 0 || k == 0 {
        return invalid("need t >= 1 and k >= 1");
    }
    if k > Color::MAX as usize {
        return invalid(format!("k = {k} exceeds 255 colors"));
    }
    guarded_power(k, t, budget.words, &format!("colorings of Ci_{t}({dset})"))?;
    let mut stats = EnumerationStats::default();
    if k > t {
        return Ok(EnumerationResult {
            colorings: Vec::new(),
            stats,
        });
    }

    let mut search = Search::new(t, k, finite_offsets(dset, t));
    search.run(0, 0);
    stats.states_explored = search.nodes;

    let to_colors = |w: &[u8]| w.iter().map(|&c| c + 1).collect::<Vec<Color>>();
    let mut words: BTreeSet<Vec<Color>> = BTreeSet::new();
    for rg in &search.found {
        if sym.colors {
            words.insert(least_image(&to_colors(rg), sym));
            continue;
        }
        for perm in (1..=k as Color).permutations(k) {
            let w: Vec<Color> = rg.iter().map(|&c| perm[c as usize]).collect();
            words.insert(least_image(&w, sym));
        }
    }

    let colorings = words
        .into_iter()
        .map(|w| {
            let coloring = FiniteColoring::new(w, k).expect("search emits surjective words");
            let matrix = check_perfect(&coloring, dset)
                .into_matrix()
                .expect("search emits perfect colorings");
            Found { coloring, matrix }
        })
        .collect();
    Ok(EnumerationResult { colorings, stats })
}
