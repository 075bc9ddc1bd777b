use super::coloring::Coloring;
use super::distance::DistanceSet;
use super::matrix::ColorCounts;
use crate::error::{invalid, Result};

/// Vertex count of a circulant: `Z_t` or all of `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(usize),
    Infinite,
}

/// The pseudograph `Ci_t(D)`.
///
/// Neighborhoods come from the offset multiset `{+d, -d mod t : d in D}`, so
/// colliding offsets give multiedges and an offset of 0 gives a loop that
/// contributes two incidences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteCirculant {
    order: usize,
    dset: DistanceSet,
}

impl FiniteCirculant {
    pub fn new(order: usize, dset: DistanceSet) -> Result<Self> {
        if order == 0 {
            return invalid("circulant order must be positive");
        }
        Ok(Self { order, dset })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn distances(&self) -> &DistanceSet {
        &self.dset
    }

    pub fn degree(&self) -> usize {
        self.dset.degree()
    }

    pub fn offsets(&self) -> Vec<usize> {
        finite_offsets(&self.dset, self.order)
    }

    /// Neighbor multiset of `v`, one entry per incidence.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.offsets()
            .into_iter()
            .map(|o| (v + o) % self.order)
            .collect()
    }
}

/// `{+d mod t, -d mod t : d in D}` with multiplicity, in `(+d, -d)` order per distance.
pub fn finite_offsets(dset: &DistanceSet, t: usize) -> Vec<usize> {
    assert!(t > 0, "finite_offsets needs t >= 1");
    dset.distances()
        .iter()
        .flat_map(|&d| {
            let r = d as usize % t;
            [r, (t - r) % t]
        })
        .collect()
}

/// `{+d, -d : d in D}`, ascending.
pub fn infinite_offsets(dset: &DistanceSet) -> Vec<i64> {
    let mut out: Vec<i64> = dset
        .distances()
        .iter()
        .flat_map(|&d| [d as i64, -(d as i64)])
        .collect();
    out.sort_unstable();
    out
}

/// Offsets as integers: residues in `0..t` for finite orders.
pub fn neighbor_offsets(dset: &DistanceSet, order: Order) -> Result<Vec<i64>> {
    match order {
        Order::Infinite => Ok(infinite_offsets(dset)),
        Order::Finite(0) => invalid("circulant order must be positive"),
        Order::Finite(t) => Ok(finite_offsets(dset, t)
            .into_iter()
            .map(|o| o as i64)
            .collect()),
    }
}

/// The covering map `Z -> Z_t`, `i -> i mod t` with a nonnegative residue.
pub fn covering_reduction(i: i64, t: usize) -> usize {
    assert!(t > 0, "covering_reduction needs t >= 1");
    i.rem_euclid(t as i64) as usize
}

/// Checks that reduction mod `t` maps every neighborhood of `Ci_inf(D)`
/// bijectively onto the neighborhood of the image vertex in `Ci_t(D)`.
///
/// Only one period of vertices (plus a negative lift) needs checking, since
/// both graphs are vertex-transitive under translation.
pub fn verify_covering(dset: &DistanceSet, t: usize) -> bool {
    if t == 0 {
        return false;
    }
    let graph = FiniteCirculant {
        order: t,
        dset: dset.clone(),
    };
    let inf = infinite_offsets(dset);
    let lifts = (0..t as i64).chain((0..t as i64).map(|i| i - 3 * t as i64));
    lifts.into_iter().all(|i| {
        let mut image: Vec<usize> = inf.iter().map(|o| covering_reduction(i + o, t)).collect();
        let mut target = graph.neighbors(covering_reduction(i, t));
        image.sort_unstable();
        target.sort_unstable();
        image == target
    })
}

/// Color counts over the neighbor multiset of vertex `v`.
///
/// The coloring is read cyclically, which covers both `Ci_t(D)` (word of
/// length `t`) and periodic colorings of `Ci_inf(D)`.
pub fn neighbor_color_counts<C: Coloring + ?Sized>(
    coloring: &C,
    dset: &DistanceSet,
    v: i64,
) -> ColorCounts {
    let mut counts = ColorCounts::zeros(coloring.color_count());
    for &d in dset.distances() {
        counts.add(coloring.color_at(v + d as i64));
        counts.add(coloring.color_at(v - d as i64));
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{FiniteColoring, PeriodicColoring};

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    #[test]
    fn offsets_examples() {
        let d13 = DistanceSet::odd(2).unwrap();
        assert_eq!(
            neighbor_offsets(&d13, Order::Infinite).unwrap(),
            vec![-3, -1, 1, 3]
        );
        assert_eq!(sorted(finite_offsets(&d13, 6)), vec![1, 3, 3, 5]);
        assert_eq!(sorted(finite_offsets(&d13, 8)), vec![1, 3, 5, 7]);
        assert!(neighbor_offsets(&d13, Order::Finite(0)).is_err());
    }

    #[test]
    fn loops_count_twice() {
        let d = DistanceSet::new(vec![2]).unwrap();
        assert_eq!(finite_offsets(&d, 2), vec![0, 0]);
        let c = FiniteColoring::from_word(vec![1, 2]).unwrap();
        assert_eq!(neighbor_color_counts(&c, &d, 0).0, vec![2, 0]);
    }

    #[test]
    fn bipartite_shapes_of_odd_circulants() {
        for n in 1..=5usize {
            let d = DistanceSet::odd(n).unwrap();
            let odd_residues = |t: usize| (0..t).filter(|r| r % 2 == 1).collect::<Vec<_>>();
            // K_{2n,2n}
            assert_eq!(sorted(finite_offsets(&d, 4 * n)), odd_residues(4 * n));
            // K_{2n+1,2n+1} minus a perfect matching
            let minus: Vec<usize> = odd_residues(4 * n + 2)
                .into_iter()
                .filter(|&r| r != 2 * n + 1)
                .collect();
            assert_eq!(sorted(finite_offsets(&d, 4 * n + 2)), minus);
            // K_{2n-1,2n-1} plus a perfect matching
            let mut plus = odd_residues(4 * n - 2);
            plus.push(2 * n - 1);
            assert_eq!(sorted(finite_offsets(&d, 4 * n - 2)), sorted(plus));
        }
    }

    #[test]
    fn covering_examples() {
        assert_eq!(covering_reduction(7, 6), 1);
        assert_eq!(covering_reduction(-1, 8), 7);
        assert_eq!(covering_reduction(10, 10), 0);
        let d13 = DistanceSet::odd(2).unwrap();
        assert!(verify_covering(&d13, 6));
        assert!(verify_covering(&d13, 8));
        assert!(verify_covering(&DistanceSet::odd(3).unwrap(), 14));
    }

    #[test]
    fn covering_holds_for_small_cases() {
        for t in 1..=20 {
            for ds in [vec![1], vec![1, 3], vec![2, 5, 7], vec![1, 2, 3, 4]] {
                assert!(verify_covering(&DistanceSet::new(ds).unwrap(), t));
            }
        }
    }

    #[test]
    fn counts_examples() {
        let d13 = DistanceSet::odd(2).unwrap();
        // three colors on Ci_8({1,3})
        let fig1 = FiniteColoring::from_word(vec![1, 2, 1, 1, 3, 3, 2, 1]).unwrap();
        assert_eq!(neighbor_color_counts(&fig1, &d13, 0).0, vec![2, 1, 1]);
        let mono = FiniteColoring::from_word(vec![1; 5]).unwrap();
        assert_eq!(neighbor_color_counts(&mono, &d13, 3).0, vec![4]);
        let bip = PeriodicColoring::from_word(vec![1, 2]).unwrap();
        for n in 1..5 {
            let d = DistanceSet::odd(n).unwrap();
            assert_eq!(neighbor_color_counts(&bip, &d, -4).0, vec![0, 2 * n as u32]);
        }
    }

    #[test]
    fn neighbors_of_ci6() {
        let g = FiniteCirculant::new(6, DistanceSet::odd(2).unwrap()).unwrap();
        assert_eq!(sorted(g.neighbors(0)), vec![1, 3, 3, 5]);
        assert_eq!(g.degree(), 4);
    }
}
