use std::fmt;

use serde::{Deserialize, Serialize};

use crate::attrset::AttrSet;

/// An ordered family of fragments.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Covering(Vec<AttrSet>);

impl Covering {
    pub fn new(fragments: Vec<AttrSet>) -> Self {
        Covering(fragments)
    }

    pub fn fragments(&self) -> &[AttrSet] {
        &self.0
    }

    pub fn into_fragments(self) -> Vec<AttrSet> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of fragments containing attribute `v`.
    pub fn degree_of(&self, v: usize) -> usize {
        self.0.iter().filter(|x| x.contains(v)).count()
    }

    /// Sorted, without empty or repeated fragments. Two coverings describe
    /// the same family of sets iff their canonical forms are equal.
    pub fn canonical(&self) -> Covering {
        let mut frags: Vec<AttrSet> = self.0.iter().copied().filter(|x| !x.is_empty()).collect();
        frags.sort_unstable_by_key(|x| x.to_vec());
        frags.dedup();
        Covering(frags)
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|x| x.to_vec()).collect()
    }
}

impl FromIterator<AttrSet> for Covering {
    fn from_iter<I: IntoIterator<Item = AttrSet>>(iter: I) -> Self {
        Covering(iter.into_iter().collect())
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, x) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_drops_empty_and_duplicates() {
        let c = Covering::new(vec![
            AttrSet::from([3]),
            AttrSet::EMPTY,
            AttrSet::from([0, 1]),
            AttrSet::from([3]),
        ]);
        assert_eq!(
            c.canonical(),
            Covering::new(vec![AttrSet::from([0, 1]), AttrSet::from([3])])
        );
        assert_eq!(c.degree_of(3), 2);
    }
}
