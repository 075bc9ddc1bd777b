use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::{guarded_power, Budget, EnumerationResult, EnumerationStats, Found};
use crate::circulant::{Color, Coloring, DistanceSet, ParameterMatrix, PeriodicColoring};
use crate::error::{invalid, Error, Result};
use crate::perfection::{admissible_matrix_templates, check_perfect};

/// Colors of `4n-1` consecutive vertices `s, ..., s+4n-2` of `Ci_inf(D_n)`.
///
/// The vertex at offset `2n-1` is the only one whose whole neighborhood lies
/// inside the window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WindowState {
    n: usize,
    word: Vec<Color>,
}

impl WindowState {
    pub fn new(n: usize, word: Vec<Color>) -> Result<Self> {
        if n == 0 {
            return invalid("window needs n >= 1");
        }
        if word.len() != 4 * n - 1 {
            return invalid(format!(
                "window for n = {n} has length {}, got {}",
                4 * n - 1,
                word.len()
            ));
        }
        if word.contains(&0) {
            return invalid("window colors are 1-based");
        }
        Ok(Self { n, word })
    }

    /// The window starting at vertex `start` of a periodic coloring.
    pub fn cut<C: Coloring + ?Sized>(coloring: &C, n: usize, start: i64) -> Result<Self> {
        let word = (0..4 * n as i64 - 1)
            .map(|i| coloring.color_at(start + i))
            .collect();
        Self::new(n, word)
    }

    pub fn word(&self) -> &[Color] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn center(&self) -> usize {
        2 * self.n - 1
    }

    /// Drops the first color and appends `next`.
    pub fn shifted(&self, next: Color) -> Self {
        let mut word = self.word[1..].to_vec();
        word.push(next);
        Self { n: self.n, word }
    }

    /// The same vertices read right to left.
    pub fn reversed(&self) -> Self {
        Self {
            n: self.n,
            word: self.word.iter().rev().copied().collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Next(Color),
    Dead,
}

/// Forced extension of windows under a fixed parameter matrix.
#[derive(Clone, Debug)]
pub struct Automaton {
    n: usize,
    matrix: ParameterMatrix,
}

impl Automaton {
    pub fn new(n: usize, matrix: ParameterMatrix) -> Result<Self> {
        if n == 0 {
            return invalid("automaton needs n >= 1");
        }
        if matrix.row_sums().iter().any(|&s| s as usize != 2 * n) {
            return invalid(format!("matrix {matrix} must have row sums {}", 2 * n));
        }
        Ok(Self { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.matrix.order()
    }

    pub fn matrix(&self) -> &ParameterMatrix {
        &self.matrix
    }

    fn validate(&self, s: &WindowState) -> Result<()> {
        if s.n != self.n {
            return invalid(format!(
                "window is for n = {}, automaton for n = {}",
                s.n, self.n
            ));
        }
        if let Some(&c) = s.word.iter().find(|&&c| c as usize > self.k()) {
            return invalid(format!("window color {c} exceeds k = {}", self.k()));
        }
        Ok(())
    }

    /// Counts over the neighbors of window offset `at` that fall inside the window.
    fn known_counts(&self, s: &WindowState, at: usize) -> Vec<u32> {
        let mut counts = vec![0; self.k()];
        let len = s.word.len() as i64;
        for d in (1..2 * self.n as i64).step_by(2) {
            for pos in [at as i64 - d, at as i64 + d] {
                if (0..len).contains(&pos) {
                    counts[s.word[pos as usize] as usize - 1] += 1;
                }
            }
        }
        counts
    }

    /// Whether the center's neighborhood matches the matrix row of its color.
    pub fn is_consistent(&self, s: &WindowState) -> Result<bool> {
        self.validate(s)?;
        let center = s.center();
        Ok(self.known_counts(s, center) == self.matrix.row(s.word[center]))
    }

    /// The color forced at offset `4n-1`: the only neighbor of offset `2n`
    /// outside the window.
    pub fn step(&self, s: &WindowState) -> Result<Step> {
        self.validate(s)?;
        let at = 2 * self.n;
        let known = self.known_counts(s, at);
        let row = self.matrix.row(s.word[at]);
        let mut next = None;
        for (j, (&want, &have)) in row.iter().zip(&known).enumerate() {
            match want.checked_sub(have) {
                None => return Ok(Step::Dead),
                Some(0) => {}
                Some(1) if next.is_none() => next = Some(j as Color + 1),
                Some(_) => return Ok(Step::Dead),
            }
        }
        Ok(next.map_or(Step::Dead, Step::Next))
    }

    pub fn advance(&self, s: &WindowState) -> Result<Option<WindowState>> {
        Ok(match self.step(s)? {
            Step::Next(c) => Some(s.shifted(c)),
            Step::Dead => None,
        })
    }
}

pub fn step_window(automaton: &Automaton, s: &WindowState) -> Result<Step> {
    automaton.step(s)
}

/// Every `k x k` nonnegative matrix with all row sums `2n`.
pub fn all_row_sum_matrices(n: usize, k: usize) -> Vec<ParameterMatrix> {
    let deg = 2 * n as u32;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    compositions(deg, k, &mut Vec::new(), &mut rows);
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let entries = idx.iter().flat_map(|&i| rows[i].iter().copied()).collect();
        out.push(ParameterMatrix::from_flat(k, entries));
        // odometer over row choices
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < rows.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Matrices worth running the automaton for. For two colors only the
/// admissible families (bipartite and the `b + c` in `{2n, 2n+1, 2n-1}` shapes);
/// for more colors every matrix with row sums `2n`.
pub fn candidate_matrices(n: usize, k: usize) -> Vec<ParameterMatrix> {
    if k == 2 {
        admissible_matrix_templates(n)
            .iter()
            .flat_map(|t| t.matrices().collect::<Vec<_>>())
            .collect()
    } else {
        all_row_sum_matrices(n, k)
    }
}

/// Per-`(n, k)` precomputation over all `k^(4n-1)` windows, which are coded
/// little-endian in base `k` with 0-based colors.
struct WindowTable {
    n: usize,
    k: usize,
    len: usize,
    top: u64,
    base: u64,
    /// Windows grouped by (center color, coded center counts).
    by_center: HashMap<(u8, u64), Vec<u64>>,
}

impl WindowTable {
    fn build(n: usize, k: usize, budget: &Budget) -> Result<Self> {
        let len = 4 * n - 1;
        let total = guarded_power(
            k,
            len,
            budget.states,
            &format!("windows for n = {n}, k = {k}"),
        )?;
        let base = 2 * n as u64 + 1;
        if base.checked_pow(k as u32).is_none() {
            return Err(Error::ResourceLimit {
                what: "neighbor count coding".into(),
                required: format!("{base}^{k}"),
                budget: u64::MAX,
            });
        }
        let mut table = Self {
            n,
            k,
            len,
            top: (k as u64).pow(len as u32 - 1),
            base,
            by_center: HashMap::new(),
        };
        let mut digits = vec![0u8; len];
        for code in 0..total {
            table.decode(code, &mut digits);
            let center = 2 * n - 1;
            let key = (digits[center], table.code_counts(&digits, center, len));
            table.by_center.entry(key).or_default().push(code);
        }
        Ok(table)
    }

    fn decode(&self, mut code: u64, digits: &mut [u8]) {
        for d in digits.iter_mut() {
            *d = (code % self.k as u64) as u8;
            code /= self.k as u64;
        }
    }

    /// Coded color counts over the neighbors of `at` lying before `limit`.
    fn code_counts(&self, digits: &[u8], at: usize, limit: usize) -> u64 {
        let mut code = 0;
        for d in (1..2 * self.n).step_by(2) {
            if let Some(left) = at.checked_sub(d) {
                code += self.base.pow(digits[left] as u32);
            }
            if at + d < limit {
                code += self.base.pow(digits[at + d] as u32);
            }
        }
        code
    }

    fn row_code(&self, row: &[u32]) -> u64 {
        row.iter()
            .enumerate()
            .map(|(c, &x)| x as u64 * self.base.pow(c as u32))
            .sum()
    }

    /// Runs the automaton for one matrix; returns the surjective cycles as
    /// period words together with the number of live states.
    fn cycles(&self, matrix: &ParameterMatrix) -> (Vec<Vec<Color>>, u64) {
        let k = self.k;
        let row_codes: Vec<u64> = matrix.rows().map(|r| self.row_code(r)).collect();
        let mut states: Vec<u64> = Vec::new();
        for (c, &rc) in row_codes.iter().enumerate() {
            match self.by_center.get(&(c as u8, rc)) {
                Some(group) => states.extend_from_slice(group),
                // no vertex can take color c
                None => return (Vec::new(), 0),
            }
        }
        let index: HashMap<u64, usize> = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();

        let at = 2 * self.n;
        let mut digits = vec![0u8; self.len];
        let next: Vec<Option<usize>> = states
            .iter()
            .map(|&code| {
                self.decode(code, &mut digits);
                let known = self.code_counts(&digits, at, self.len);
                let want = row_codes[digits[at] as usize];
                // digitwise difference is a unit vector iff the coded difference
                // is a power of the base
                let diff = want.checked_sub(known)?;
                let j = (0..k).find(|&j| self.base.pow(j as u32) == diff)?;
                let succ = code / k as u64 + j as u64 * self.top;
                index.get(&succ).copied()
            })
            .collect();

        // 0 = unseen, 1 = on the current path, 2 = finished
        let mut mark = vec![0u8; states.len()];
        let mut found = Vec::new();
        for start in 0..states.len() {
            if mark[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut cur = Some(start);
            while let Some(s) = cur {
                if mark[s] != 0 {
                    break;
                }
                mark[s] = 1;
                path.push(s);
                cur = next[s];
            }
            if let Some(s) = cur.filter(|&s| mark[s] == 1) {
                let from = path.iter().position(|&p| p == s).expect("on path");
                let word: Vec<Color> = path[from..]
                    .iter()
                    .map(|&i| (states[i] % k as u64) as Color + 1)
                    .collect();
                let mut used = vec![false; k];
                for &c in &word {
                    used[c as usize - 1] = true;
                }
                if used.iter().all(|&u| u) {
                    found.push(word);
                }
            }
            for p in path {
                mark[p] = 2;
            }
        }
        (found, states.len() as u64)
    }
}

/// All perfect `k`-colorings of `Ci_inf(D_n)`, in canonical form.
///
/// Every such coloring is periodic and its window sequence is a bi-infinite
/// walk of the deterministic automaton, hence a cycle; so collecting the
/// cycles for each candidate matrix is complete. `matrices` defaults to
/// [`candidate_matrices`].
pub fn enumerate_periodic_perfect(
    n: usize,
    k: usize,
    matrices: Option<Vec<ParameterMatrix>>,
    budget: &Budget,
) -> Result<EnumerationResult<PeriodicColoring>> {
    if n == 0 || k == 0 {
        return invalid("need n >= 1 and k >= 1");
    }
    if k > Color::MAX as usize {
        return invalid(format!("k = {k} exceeds 255 colors"));
    }
    let matrices = matrices.unwrap_or_else(|| candidate_matrices(n, k));
    if let Some(bad) = matrices
        .iter()
        .find(|m| m.order() != k || m.row_sums().iter().any(|&s| s as usize != 2 * n))
    {
        return invalid(format!(
            "matrix {bad} is not a {k}x{k} matrix with row sums {}",
            2 * n
        ));
    }
    let table = WindowTable::build(n, k, budget)?;
    let dset = DistanceSet::odd(n)?;

    let per_matrix: Vec<(Vec<Found<PeriodicColoring>>, u64, u64)> = matrices
        .par_iter()
        .map(|m| {
            let (cycles, live) = table.cycles(m);
            let n_cycles = cycles.len() as u64;
            let found = cycles
                .into_iter()
                .map(|word| {
                    let coloring = PeriodicColoring::new(word, k).expect("cycle is surjective");
                    debug_assert_eq!(check_perfect(&coloring, &dset).matrix(), Some(m));
                    Found {
                        coloring,
                        matrix: m.clone(),
                    }
                })
                .collect();
            (found, live, n_cycles)
        })
        .collect();

    let mut stats = EnumerationStats {
        matrices_tried: matrices.len() as u64,
        ..Default::default()
    };
    let mut all = BTreeSet::new();
    for (found, live, cycles) in per_matrix {
        stats.states_explored += live;
        stats.cycles_found += cycles;
        all.extend(found);
    }
    Ok(EnumerationResult {
        colorings: all.into_iter().collect(),
        stats,
    })
}
