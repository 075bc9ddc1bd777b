//! Naive reference implementations used as oracles by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use circperf::Color;

/// Parameter matrix of `word` on `Ci_t(D)`, `t = word.len()`, by walking every
/// signed distance separately. `None` if not perfect.
pub fn naive_finite_matrix(word: &[Color], dists: &[u32]) -> Option<Vec<Vec<u32>>> {
    let t = word.len() as i64;
    rows_from(word, |u| {
        dists
            .iter()
            .flat_map(|&d| [d as i64, -(d as i64)])
            .map(|s| word[(u + s).rem_euclid(t) as usize])
            .collect()
    })
}

/// Parameter matrix of the periodic coloring of `Ci_inf(D)` with one period
/// `word`, counting neighbors on the integers.
pub fn naive_periodic_matrix(word: &[Color], dists: &[u32]) -> Option<Vec<Vec<u32>>> {
    let p = word.len() as i64;
    let at = |i: i64| word[i.rem_euclid(p) as usize];
    rows_from(word, |u| {
        let mut out = Vec::new();
        for &d in dists {
            out.push(at(u + d as i64));
            out.push(at(u - d as i64));
        }
        out
    })
}

fn rows_from(word: &[Color], neighbors: impl Fn(i64) -> Vec<Color>) -> Option<Vec<Vec<u32>>> {
    let k = *word.iter().max()? as usize;
    let mut rows: Vec<Option<Vec<u32>>> = vec![None; k];
    for u in 0..word.len() {
        let mut counts = vec![0u32; k];
        for c in neighbors(u as i64) {
            counts[c as usize - 1] += 1;
        }
        let slot = &mut rows[word[u] as usize - 1];
        match slot {
            Some(r) if *r != counts => return None,
            Some(_) => {}
            None => *slot = Some(counts),
        }
    }
    rows.into_iter().collect()
}

/// All surjective perfect `k`-colorings of `Ci_t(D)` by trying every word.
pub fn brute_force_finite(t: usize, dists: &[u32], k: usize) -> BTreeSet<Vec<Color>> {
    let mut out = BTreeSet::new();
    let mut word = vec![1 as Color; t];
    loop {
        let used: BTreeSet<Color> = word.iter().copied().collect();
        if used.len() == k && naive_finite_matrix(&word, dists).is_some() {
            out.insert(word.clone());
        }
        let mut i = 0;
        loop {
            if i == t {
                return out;
            }
            if (word[i] as usize) < k {
                word[i] += 1;
                break;
            }
            word[i] = 1;
            i += 1;
        }
    }
}

/// Least rotation of the primitive period, by trying every shift.
pub fn naive_canonical(word: &[Color]) -> Vec<Color> {
    let n = word.len();
    let p = (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| word[i] == word[i % p]))
        .unwrap();
    (0..p)
        .map(|s| (0..p).map(|i| word[(i + s) % p]).collect::<Vec<_>>())
        .min()
        .unwrap()
}

/// Canonical form after also relabeling colors, by trying every permutation.
pub fn naive_class(word: &[Color]) -> Vec<Color> {
    let k = *word.iter().max().unwrap() as usize;
    let mut perm: Vec<Color> = (1..=k as Color).collect();
    let mut best = naive_canonical(word);
    loop {
        let mapped: Vec<Color> = word.iter().map(|&c| perm[c as usize - 1]).collect();
        best = best.min(naive_canonical(&mapped));
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            return best;
        };
        let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

pub fn odd(n: usize) -> Vec<u32> {
    (1..=n as u32).map(|i| 2 * i - 1).collect()
}
