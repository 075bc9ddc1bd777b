use serde::{Deserialize, Serialize};

use super::coloring::{Color, Coloring, ColoringKind, FiniteColoring, PeriodicColoring};
use super::distance::DistanceSet;
use crate::error::{Error, Result};

/// Either kind of coloring, for callers that read colorings from files.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyColoring {
    Finite(FiniteColoring),
    Periodic(PeriodicColoring),
}

impl Coloring for AnyColoring {
    fn word(&self) -> &[Color] {
        match self {
            AnyColoring::Finite(c) => c.word(),
            AnyColoring::Periodic(c) => c.word(),
        }
    }

    fn color_count(&self) -> usize {
        match self {
            AnyColoring::Finite(c) => c.color_count(),
            AnyColoring::Periodic(c) => c.color_count(),
        }
    }

    fn kind(&self) -> ColoringKind {
        match self {
            AnyColoring::Finite(_) => ColoringKind::Finite,
            AnyColoring::Periodic(_) => ColoringKind::Periodic,
        }
    }
}

/// Wire form of a coloring together with the distance set it lives on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub kind: ColoringKind,
    pub t_or_period: usize,
    pub k: usize,
    pub word: Vec<Color>,
    pub distances: Vec<u32>,
}

impl ColoringDoc {
    pub fn new<C: Coloring + ?Sized>(coloring: &C, dset: &DistanceSet) -> Self {
        Self {
            kind: coloring.kind(),
            t_or_period: coloring.len(),
            k: coloring.color_count(),
            word: coloring.word().to_vec(),
            distances: dset.distances().to_vec(),
        }
    }

    pub fn into_parts(self) -> Result<(AnyColoring, DistanceSet)> {
        if self.t_or_period != self.word.len() {
            return Err(Error::Parse(format!(
                "t_or_period is {} but the word has {} entries",
                self.t_or_period,
                self.word.len()
            )));
        }
        let dset = DistanceSet::new(self.distances)?;
        let coloring = match self.kind {
            ColoringKind::Finite => AnyColoring::Finite(FiniteColoring::new(self.word, self.k)?),
            ColoringKind::Periodic => {
                AnyColoring::Periodic(PeriodicColoring::new(self.word, self.k)?)
            }
        };
        Ok((coloring, dset))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring doc serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format() {
        let c = FiniteColoring::from_word(vec![1, 2, 1, 2]).unwrap();
        let doc = ColoringDoc::new(&c, &DistanceSet::odd(1).unwrap());
        assert_eq!(
            doc.to_json(),
            r#"{"kind":"finite","t_or_period":4,"k":2,"word":[1,2,1,2],"distances":[1]}"#
        );
        let (back, d) = ColoringDoc::from_json(&doc.to_json())
            .unwrap()
            .into_parts()
            .unwrap();
        assert_eq!(back, AnyColoring::Finite(c));
        assert_eq!(d.distances(), &[1]);
    }

    #[test]
    fn rejects_bad_docs() {
        let bad_len = r#"{"kind":"periodic","t_or_period":3,"k":2,"word":[1,2],"distances":[1]}"#;
        assert!(ColoringDoc::from_json(bad_len)
            .unwrap()
            .into_parts()
            .is_err());
        let bad_kind = r#"{"kind":"cyclic","t_or_period":2,"k":2,"word":[1,2],"distances":[1]}"#;
        assert!(ColoringDoc::from_json(bad_kind).is_err());
        let bad_d = r#"{"kind":"finite","t_or_period":2,"k":2,"word":[1,2],"distances":[3,1]}"#;
        assert!(ColoringDoc::from_json(bad_d).unwrap().into_parts().is_err());
    }
}
