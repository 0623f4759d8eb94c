//! Multi-colorings and 0/1 assignments, and their link to coverings.

use crate::algebra::ideal::{VarId, VarLayout};
use crate::attrset::AttrSet;
use crate::covering::Covering;
use crate::error::{Error, Result};

/// An `n × k` boolean matrix; entry `(i, j)` says attribute `i` carries
/// color `j` (1-based). Stored column-wise as color classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiColoring {
    n: usize,
    classes: Vec<AttrSet>,
}

impl MultiColoring {
    pub fn new(n: usize, k: usize) -> Self {
        MultiColoring {
            n,
            classes: vec![AttrSet::EMPTY; k],
        }
    }

    pub fn from_classes(n: usize, classes: Vec<AttrSet>) -> Self {
        assert!(classes.iter().all(|c| c.is_subset(AttrSet::full(n))));
        MultiColoring { n, classes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn get(&self, attribute: usize, color: usize) -> bool {
        self.classes[color - 1].contains(attribute)
    }

    pub fn set(&mut self, attribute: usize, color: usize, on: bool) {
        assert!(attribute < self.n);
        let class = &mut self.classes[color - 1];
        if on {
            class.insert(attribute);
        } else {
            class.remove(attribute);
        }
    }

    /// Row `μ(i)`.
    pub fn row(&self, attribute: usize) -> Vec<bool> {
        self.classes.iter().map(|c| c.contains(attribute)).collect()
    }

    pub fn classes(&self) -> &[AttrSet] {
        &self.classes
    }
}

/// Color classes as fragments, in color order; empty classes and repeats
/// of an earlier class are dropped.
pub fn multicoloring_to_covering(mu: &MultiColoring) -> Covering {
    let mut out: Vec<AttrSet> = Vec::with_capacity(mu.k());
    for &c in &mu.classes {
        if !c.is_empty() && !out.contains(&c) {
            out.push(c);
        }
    }
    Covering::new(out)
}

/// Fragment `j` becomes color `j + 1`; colors past the covering stay empty.
pub fn covering_to_multicoloring(c: &Covering, k: usize, n: usize) -> Result<MultiColoring> {
    if c.len() > k {
        return Err(Error::SizeExceedsK { size: c.len(), k });
    }
    let universe = AttrSet::full(n);
    if let Some(x) = c.fragments().iter().find(|x| !x.is_subset(universe)) {
        let attribute = x.difference(universe).iter().next().unwrap();
        return Err(Error::AttributeOutOfRange { attribute, n });
    }
    let mut classes = c.fragments().to_vec();
    classes.resize(k, AttrSet::EMPTY);
    Ok(MultiColoring { n, classes })
}

/// A total 0/1 assignment of the variables of a layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub layout: VarLayout,
    pub bits: u128,
}

impl Assignment {
    pub fn value(&self, v: VarId) -> bool {
        self.bits & (1u128 << self.layout.index(v)) != 0
    }

    pub fn to_multicoloring(&self) -> MultiColoring {
        let n = self.layout.n;
        let classes = (1..=self.layout.k)
            .map(|color| {
                (0..n)
                    .filter(|&attribute| self.value(VarId { attribute, color }))
                    .collect()
            })
            .collect();
        MultiColoring { n, classes }
    }

    pub fn from_multicoloring(mu: &MultiColoring) -> Result<Self> {
        let layout = VarLayout::new(mu.n, mu.k())?;
        let mut bits = 0u128;
        for (j, class) in mu.classes.iter().enumerate() {
            for attribute in class.iter() {
                bits |= 1u128
                    << layout.index(VarId {
                        attribute,
                        color: j + 1,
                    });
            }
        }
        Ok(Assignment { layout, bits })
    }
}
