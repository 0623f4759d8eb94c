//! Fixed-width attribute sets and ordered set families.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest universe an [`AttrSet`] can address.
pub const MAX_ATTRIBUTES: usize = 128;

/// A set of attribute indices in `0..MAX_ATTRIBUTES`, stored as a bitmask.
///
/// Ordering is by the underlying mask, which is only used to give
/// families a canonical order; it carries no other meaning.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttrSet(u128);

impl AttrSet {
    pub const EMPTY: AttrSet = AttrSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        AttrSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ATTRIBUTES,
            "universe of {n} attributes exceeds {MAX_ATTRIBUTES}"
        );
        if n == MAX_ATTRIBUTES {
            AttrSet(u128::MAX)
        } else {
            AttrSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ATTRIBUTES);
        AttrSet(1u128 << i)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_ATTRIBUTES);
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < MAX_ATTRIBUTES);
        self.0 &= !(1u128 << i);
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ATTRIBUTES && self.0 & (1u128 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: AttrSet) -> AttrSet {
        AttrSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AttrSet) -> AttrSet {
        AttrSet(self.0 & other.0)
    }

    pub fn difference(self, other: AttrSet) -> AttrSet {
        AttrSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AttrSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: AttrSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: AttrSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn span(self) -> usize {
        (128 - self.0.leading_zeros()) as usize
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for AttrSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = AttrSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for AttrSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for AttrSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

// Sets travel as sorted integer arrays.
impl Serialize for AttrSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for AttrSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&i| i >= MAX_ATTRIBUTES) {
            return Err(serde::de::Error::custom(format!(
                "attribute {bad} exceeds the supported maximum index {}",
                MAX_ATTRIBUTES - 1
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// An ordered list of attribute sets. Order is significant: the greedy
/// construction consumes required sets in this order.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetFamily(Vec<AttrSet>);

impl SetFamily {
    pub fn new() -> Self {
        SetFamily(Vec::new())
    }

    pub fn from_sets(sets: Vec<AttrSet>) -> Self {
        SetFamily(sets)
    }

    pub fn sets(&self) -> &[AttrSet] {
        &self.0
    }

    pub fn into_sets(self) -> Vec<AttrSet> {
        self.0
    }

    pub fn push(&mut self, s: AttrSet) {
        self.0.push(s);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AttrSet> {
        self.0.iter()
    }

    pub fn contains(&self, s: AttrSet) -> bool {
        self.0.contains(&s)
    }

    /// Union of all members.
    pub fn union(&self) -> AttrSet {
        self.0.iter().fold(AttrSet::EMPTY, |acc, &s| acc.union(s))
    }

    /// Number of members containing attribute `i`.
    pub fn degree_of(&self, i: usize) -> usize {
        self.0.iter().filter(|s| s.contains(i)).count()
    }

    /// Number of members meeting `b`.
    pub fn degree_of_set(&self, b: AttrSet) -> usize {
        self.0.iter().filter(|s| s.intersects(b)).count()
    }

    /// Maximum per-attribute degree; 0 for the empty family.
    pub fn max_degree(&self) -> usize {
        let span = self.union().span();
        (0..span).map(|i| self.degree_of(i)).max().unwrap_or(0)
    }

    /// Largest member size; 0 for the empty family.
    pub fn max_set_size(&self) -> usize {
        self.0.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn is_antichain(&self) -> bool {
        self.0.iter().enumerate().all(|(a, &x)| {
            self.0
                .iter()
                .enumerate()
                .all(|(b, &y)| a == b || !x.is_subset(y))
        })
    }

    /// Minimal members, first occurrences kept, relative order preserved.
    pub fn minimal(&self) -> SetFamily {
        self.antichain_by(|other, s| other.is_proper_subset(s))
    }

    /// Maximal members, first occurrences kept, relative order preserved.
    pub fn maximal(&self) -> SetFamily {
        self.antichain_by(|other, s| s.is_proper_subset(other))
    }

    fn antichain_by(&self, dominated: impl Fn(AttrSet, AttrSet) -> bool) -> SetFamily {
        let mut out: Vec<AttrSet> = Vec::with_capacity(self.0.len());
        for &s in &self.0 {
            if out.contains(&s) {
                continue;
            }
            if self.0.iter().any(|&other| dominated(other, s)) {
                continue;
            }
            out.push(s);
        }
        SetFamily(out)
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, s) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<AttrSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = AttrSet>>(iter: I) -> Self {
        SetFamily(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a AttrSet;
    type IntoIter = std::slice::Iter<'a, AttrSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Builds a family from nested slices, e.g. `family(&[&[0, 1], &[2]])`.
pub fn family(sets: &[&[usize]]) -> SetFamily {
    sets.iter().map(|s| s.iter().copied().collect()).collect()
}
