use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Sorted set of positive distances defining a circulant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DistanceSet(Vec<u32>);

impl DistanceSet {
    pub fn new(distances: Vec<u32>) -> Result<Self> {
        if distances.is_empty() {
            return invalid("distance set must be nonempty");
        }
        if distances.contains(&0) {
            return invalid("distances must be positive");
        }
        if distances.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!(
                "distances must be strictly increasing, got {distances:?}"
            ));
        }
        Ok(Self(distances))
    }

    /// The continuous odd set `{1, 3, ..., 2n-1}`.
    pub fn odd(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("odd distance set needs n >= 1");
        }
        Ok(Self((0..n as u32).map(|i| 2 * i + 1).collect()))
    }

    pub fn distances(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Degree of every vertex of the circulant, loops and multiedges included.
    pub fn degree(&self) -> usize {
        2 * self.0.len()
    }

    pub fn is_odd_continuous(&self, n: usize) -> bool {
        self.0.len() == n
            && self
                .0
                .iter()
                .enumerate()
                .all(|(i, &d)| d == 2 * i as u32 + 1)
    }

    /// `Some(n)` when this is `{1, 3, ..., 2n-1}`.
    pub fn odd_continuous_n(&self) -> Option<usize> {
        let n = self.0.len();
        self.is_odd_continuous(n).then_some(n)
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|d| d % 2 == 1)
    }
}

/// Shorthand for [`DistanceSet::odd`].
pub fn make_odd_distance_set(n: usize) -> Result<DistanceSet> {
    DistanceSet::odd(n)
}

impl TryFrom<Vec<u32>> for DistanceSet {
    type Error = crate::Error;

    fn try_from(value: Vec<u32>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<DistanceSet> for Vec<u32> {
    fn from(value: DistanceSet) -> Self {
        value.0
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_sets() {
        assert_eq!(make_odd_distance_set(1).unwrap().distances(), &[1]);
        assert_eq!(make_odd_distance_set(2).unwrap().distances(), &[1, 3]);
        assert_eq!(make_odd_distance_set(4).unwrap().distances(), &[1, 3, 5, 7]);
        assert!(make_odd_distance_set(0).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(DistanceSet::new(vec![]).is_err());
        assert!(DistanceSet::new(vec![0, 1]).is_err());
        assert!(DistanceSet::new(vec![3, 1]).is_err());
        assert!(DistanceSet::new(vec![1, 1]).is_err());
    }

    #[test]
    fn odd_continuous_predicate() {
        let d = DistanceSet::new(vec![1, 3, 5]).unwrap();
        assert!(d.is_odd_continuous(3));
        assert!(!d.is_odd_continuous(2));
        assert_eq!(d.odd_continuous_n(), Some(3));
        let e = DistanceSet::new(vec![1, 5]).unwrap();
        assert_eq!(e.odd_continuous_n(), None);
        assert!(e.all_odd());
        assert!(!DistanceSet::new(vec![1, 2]).unwrap().all_odd());
    }
}
