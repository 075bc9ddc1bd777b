//! Comparison of the colorings induced from finite circulants and from the
//! infinite path against the complete enumeration on `Ci_inf(D_n)`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::{
    Color, Coloring, DistanceSet, FiniteColoring, ParameterMatrix, PeriodicColoring,
};
use crate::constructors::path_colorings;
use crate::enumeration::{
    all_row_sum_matrices, canonical_form, enumerate_perfect_finite, enumerate_periodic_perfect,
    Budget, Symmetry,
};
use crate::error::{invalid, Result};
use crate::perfection::{
    check_even_odd_balance, check_local_patterns, check_perfect, check_period_length_claim,
    is_bipartite_coloring, OuterDegrees,
};

/// The periodic coloring of `Ci_inf(D)` obtained by pulling a perfect coloring
/// of `Ci_t(D)` back along reduction mod `t`.
pub fn induce(coloring: &FiniteColoring, dset: &DistanceSet) -> Result<PeriodicColoring> {
    if !check_perfect(coloring, dset).is_perfect() {
        return invalid(format!(
            "{coloring} is not perfect on Ci_{}({dset})",
            coloring.order()
        ));
    }
    PeriodicColoring::new(coloring.word().to_vec(), coloring.color_count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "from_4n-2")]
    From4nMinus2,
    #[serde(rename = "from_4n")]
    From4n,
    #[serde(rename = "from_4n+2")]
    From4nPlus2,
    #[serde(rename = "from_path")]
    FromPath,
}

impl Provenance {
    pub fn is_finite(self) -> bool {
        self != Provenance::FromPath
    }

    /// Order of the finite circulant this tag refers to.
    pub fn order(self, n: usize) -> Option<usize> {
        match self {
            Provenance::From4nMinus2 => Some(4 * n - 2),
            Provenance::From4n => Some(4 * n),
            Provenance::From4nPlus2 => Some(4 * n + 2),
            Provenance::FromPath => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedEntry {
    pub matrix: ParameterMatrix,
    pub provenance: BTreeSet<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSet {
    pub n: usize,
    pub k: usize,
    pub colorings: BTreeMap<PeriodicColoring, InducedEntry>,
}

impl InducedSet {
    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn contains(&self, coloring: &PeriodicColoring) -> bool {
        self.colorings.contains_key(coloring)
    }

    pub fn provenance(&self, coloring: &PeriodicColoring) -> Option<&BTreeSet<Provenance>> {
        self.colorings.get(coloring).map(|e| &e.provenance)
    }

    /// Members induced from at least one finite circulant.
    pub fn finite_part(&self) -> impl Iterator<Item = &PeriodicColoring> {
        self.colorings
            .iter()
            .filter(|(_, e)| e.provenance.iter().any(|p| p.is_finite()))
            .map(|(c, _)| c)
    }

    /// Members that only come from the infinite path.
    pub fn path_only(&self) -> impl Iterator<Item = &PeriodicColoring> {
        self.colorings
            .iter()
            .filter(|(_, e)| e.provenance.iter().all(|p| !p.is_finite()))
            .map(|(c, _)| c)
    }

    fn insert(&mut self, coloring: PeriodicColoring, matrix: ParameterMatrix, tag: Provenance) {
        self.colorings
            .entry(coloring)
            .or_insert_with(|| InducedEntry {
                matrix,
                provenance: BTreeSet::new(),
            })
            .provenance
            .insert(tag);
    }
}

/// Everything induced on `Ci_inf(D_n)` by perfect `k`-colorings of
/// `Ci_t(D_n)`, `t = 4n-2, 4n, 4n+2`, and of the infinite path.
pub fn build_induced_set(n: usize, k: usize, budget: &Budget) -> Result<InducedSet> {
    if n == 0 || k == 0 {
        return invalid("need n >= 1 and k >= 1");
    }
    let dset = DistanceSet::odd(n)?;
    let tags = [
        Provenance::From4nMinus2,
        Provenance::From4n,
        Provenance::From4nPlus2,
    ];
    // Rotations of Ci_t induce rotations of the same periodic coloring.
    let finite: Vec<(Provenance, Vec<FiniteColoring>)> = tags
        .par_iter()
        .map(|&tag| {
            let t = tag.order(n).unwrap();
            let found = enumerate_perfect_finite(t, &dset, k, Symmetry::ROTATION, budget)?;
            Ok((tag, found.iter().cloned().collect()))
        })
        .collect::<Result<_>>()?;

    let mut set = InducedSet {
        n,
        k,
        colorings: BTreeMap::new(),
    };
    for (tag, colorings) in finite {
        for c in colorings {
            let induced = induce(&c, &dset)?;
            let matrix = check_perfect(&induced, &dset)
                .into_matrix()
                .expect("induced coloring is perfect");
            set.insert(induced, matrix, tag);
        }
    }
    for p in path_colorings(k)? {
        let Some(matrix) = check_perfect(&p, &dset).into_matrix() else {
            return invalid(format!(
                "path coloring {p} is not perfect on Ci_inf({dset})"
            ));
        };
        set.insert(p, matrix, Provenance::FromPath);
    }
    Ok(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Enumeration and induced set agree.
    Confirmed,
    /// Some enumerated coloring is not induced.
    Counterexample,
    /// Everything enumerated is induced, but some induced coloring was not
    /// enumerated: a bug in one of the two searches.
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub word: Vec<Color>,
    pub matrix: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<Provenance>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub enumerate: Duration,
    pub induce: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub n: usize,
    pub k: usize,
    pub verdict: Verdict,
    pub enumerated_count: usize,
    pub induced_count: usize,
    /// The same two counts after folding color permutations.
    pub enumerated_classes: usize,
    pub induced_classes: usize,
    /// Enumerated but not induced.
    pub missing: Vec<ReportEntry>,
    /// Induced but not enumerated; empty whenever both searches are sound.
    pub extra_sources: Vec<ReportEntry>,
    /// Induced only by the infinite path.
    pub path_only: Vec<ReportEntry>,
    #[serde(skip)]
    pub timings: Timings,
}

impl CheckReport {
    pub fn is_confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn color_classes<'a>(colorings: impl Iterator<Item = &'a PeriodicColoring>) -> usize {
    let colors_only = Symmetry {
        rotation: true,
        reflection: false,
        colors: true,
    };
    colorings
        .map(|c| canonical_form(c.word(), colors_only))
        .collect::<BTreeSet<_>>()
        .len()
}

fn check(n: usize, k: usize, budget: &Budget) -> Result<CheckReport> {
    if n == 0 || k == 0 {
        return invalid("need n >= 1 and k >= 1");
    }
    let start = Instant::now();
    // all row-sum matrices, so the enumeration leans on no lemma
    let enumerated = enumerate_periodic_perfect(n, k, Some(all_row_sum_matrices(n, k)), budget)?;
    let enumerate = start.elapsed();
    let start = Instant::now();
    let induced = build_induced_set(n, k, budget)?;
    let induce = start.elapsed();

    let entry = |c: &PeriodicColoring, m: &ParameterMatrix, prov: Vec<Provenance>| ReportEntry {
        word: c.word().to_vec(),
        matrix: m.to_rows(),
        provenance: prov,
    };
    let enumerated_set: BTreeSet<&PeriodicColoring> = enumerated.iter().collect();
    let missing: Vec<ReportEntry> = enumerated
        .colorings
        .iter()
        .filter(|f| !induced.contains(&f.coloring))
        .map(|f| entry(&f.coloring, &f.matrix, Vec::new()))
        .collect();
    let extra_sources: Vec<ReportEntry> = induced
        .colorings
        .iter()
        .filter(|(c, _)| !enumerated_set.contains(c))
        .map(|(c, e)| entry(c, &e.matrix, e.provenance.iter().copied().collect()))
        .collect();
    let path_only = induced
        .path_only()
        .map(|c| {
            let e = &induced.colorings[c];
            entry(c, &e.matrix, e.provenance.iter().copied().collect())
        })
        .collect();
    let verdict = if !missing.is_empty() {
        Verdict::Counterexample
    } else if !extra_sources.is_empty() {
        Verdict::Inconsistent
    } else {
        Verdict::Confirmed
    };
    Ok(CheckReport {
        n,
        k,
        verdict,
        enumerated_count: enumerated.len(),
        induced_count: induced.len(),
        enumerated_classes: color_classes(enumerated.iter()),
        induced_classes: color_classes(induced.colorings.keys()),
        missing,
        extra_sources,
        path_only,
        timings: Timings { enumerate, induce },
    })
}

/// Every perfect 2-coloring of `Ci_inf(D_n)` is induced from `Ci_t(D_n)`,
/// `t = 4n-2, 4n, 4n+2`, or from the infinite path: checked exhaustively at `n`.
pub fn check_theorem_k2(n: usize, budget: &Budget) -> Result<CheckReport> {
    check(n, 2, budget)
}

/// The same comparison at `k` colors. A mismatch is reported, never raised.
pub fn check_conjecture(n: usize, k: usize, budget: &Budget) -> Result<CheckReport> {
    check(n, k, budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub name: String,
    /// Colorings the statement applies to.
    pub checked: usize,
    pub passed: bool,
    pub witnesses: Vec<Vec<Color>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub n: usize,
    pub colorings: usize,
    /// Outer-degree sums `b + c` that occur, ascending.
    pub sums_realized: Vec<u32>,
    pub lemmas: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.lemmas.iter().all(|l| l.passed)
    }

    pub fn lemma(&self, name: &str) -> Option<&LemmaResult> {
        self.lemmas.iter().find(|l| l.name == name)
    }
}

/// Runs the structural statements about perfect 2-colorings of `Ci_inf(D_n)`
/// over the full enumeration.
pub fn lemma_regression_suite(n: usize, budget: &Budget) -> Result<LemmaReport> {
    if n == 0 {
        return invalid("n must be positive");
    }
    let dset = DistanceSet::odd(n)?;
    let all = enumerate_periodic_perfect(n, 2, Some(all_row_sum_matrices(n, 2)), budget)?;

    struct Tally {
        name: &'static str,
        checked: usize,
        witnesses: Vec<Vec<Color>>,
    }
    let mut tallies: Vec<Tally> = [
        "outer_degree_sum",
        "local_patterns",
        "period_2n_plus_1",
        "period_2n_minus_1",
        "period_4n",
        "even_odd_balance",
    ]
    .into_iter()
    .map(|name| Tally {
        name,
        checked: 0,
        witnesses: Vec::new(),
    })
    .collect();
    let mut record = |idx: usize, ok: bool, word: &[Color]| {
        tallies[idx].checked += 1;
        if !ok {
            tallies[idx].witnesses.push(word.to_vec());
        }
    };

    let n32 = n as u32;
    let allowed = [4 * n32, 2 * n32, 2 * n32 + 1, 2 * n32 - 1];
    let mut sums = BTreeSet::new();
    for found in &all.colorings {
        let c = &found.coloring;
        let word = c.word();
        let deg = OuterDegrees::from_matrix(&found.matrix, n)?;
        let sum = deg.sum();
        sums.insert(sum);
        record(0, allowed.contains(&sum), word);
        record(1, check_local_patterns(c, n)?, word);
        if is_bipartite_coloring(c, &dset)? {
            continue;
        }
        let period_slot = match sum {
            s if s == 2 * n32 + 1 => Some(2),
            s if s + 1 == 2 * n32 => Some(3),
            s if s == 2 * n32 => Some(4),
            _ => None,
        };
        if let Some(slot) = period_slot {
            record(slot, check_period_length_claim(c, n)?, word);
        }
        if c.period() % 2 == 0 {
            record(5, check_even_odd_balance(c)?, word);
        }
    }

    Ok(LemmaReport {
        n,
        colorings: all.len(),
        sums_realized: sums.into_iter().collect(),
        lemmas: tallies
            .into_iter()
            .map(|t| LemmaResult {
                name: t.name.to_string(),
                checked: t.checked,
                passed: t.witnesses.is_empty(),
                witnesses: t.witnesses,
            })
            .collect(),
    })
}
