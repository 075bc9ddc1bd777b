//! Cyclic word helpers shared by colorings and canonical forms.

/// Length of the shortest period `p` with `p | len` and `w[i] = w[i + p]`.
pub fn primitive_period<T: PartialEq>(word: &[T]) -> usize {
    let n = word.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (p..n).all(|i| word[i] == word[i - p]))
        .unwrap_or(n)
}

/// Start index of the lexicographically least rotation (smallest such index).
///
/// Duval's Lyndon factorization over the doubled word.
pub fn least_rotation_start<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &word[i % n];
    let mut i = 0;
    let mut ans = 0;
    while i < n {
        ans = i;
        let mut j = i + 1;
        let mut k = i;
        while j < 2 * n && at(k) <= at(j) {
            if at(k) < at(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    ans
}

pub fn rotate<T: Clone>(word: &[T], shift: usize) -> Vec<T> {
    if word.is_empty() {
        return Vec::new();
    }
    let s = shift % word.len();
    word[s..].iter().chain(&word[..s]).cloned().collect()
}

pub fn least_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    rotate(word, least_rotation_start(word))
}
