//! Splitting instances: the attribute universe together with the forbidden
//! family F (sets that must never share a fragment) and the required family
//! A (sets that must share at least one fragment).

use serde::{Deserialize, Serialize};

use crate::attrset::{AttrSet, SetFamily, MAX_ATTRIBUTES};
use crate::covering::Covering;
use crate::error::{Error, Result};

/// Instance as it appears on disk, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawInstance {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribute_names: Option<Vec<String>>,
    pub forbidden: SetFamily,
    pub required: SetFamily,
}

/// A validated instance.
///
/// Construction goes through [`validate`], so every value of this type has
/// all sets inside `0..n`, no empty or singleton forbidden set and no empty
/// required set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "RawInstance")]
pub struct Instance {
    n: usize,
    attribute_names: Option<Vec<String>>,
    forbidden: SetFamily,
    required: SetFamily,
}

impl From<Instance> for RawInstance {
    fn from(inst: Instance) -> Self {
        RawInstance {
            n: inst.n,
            attribute_names: inst.attribute_names,
            forbidden: inst.forbidden,
            required: inst.required,
        }
    }
}

impl TryFrom<RawInstance> for Instance {
    type Error = Error;

    fn try_from(raw: RawInstance) -> Result<Self> {
        validate(raw)
    }
}

/// Checks a raw instance and strips empty required sets.
pub fn validate(raw: RawInstance) -> Result<Instance> {
    let RawInstance {
        n,
        attribute_names,
        forbidden,
        required,
    } = raw;
    if n > MAX_ATTRIBUTES {
        return Err(Error::UniverseTooLarge(n));
    }
    if let Some(names) = &attribute_names {
        if names.len() != n {
            return Err(Error::NameCountMismatch {
                names: names.len(),
                n,
            });
        }
    }
    let universe = AttrSet::full(n);
    for s in forbidden.iter().chain(required.iter()) {
        if let Some(attribute) = s.difference(universe).iter().next() {
            return Err(Error::AttributeOutOfRange { attribute, n });
        }
    }
    for s in &forbidden {
        match s.len() {
            0 => return Err(Error::EmptyForbiddenSet),
            1 => return Err(Error::SingletonForbiddenSet(s.iter().next().unwrap())),
            _ => {}
        }
    }
    let required = required.iter().copied().filter(|s| !s.is_empty()).collect();
    Ok(Instance {
        n,
        attribute_names,
        forbidden,
        required,
    })
}

/// What [`degree`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeTarget {
    /// Members containing the attribute.
    Element(usize),
    /// Members meeting the set.
    Set(AttrSet),
    /// Maximum of `Element(i)` over all attributes.
    FamilyMax,
}

pub fn degree(family: &SetFamily, target: DegreeTarget) -> usize {
    match target {
        DegreeTarget::Element(i) => family.degree_of(i),
        DegreeTarget::Set(b) => family.degree_of_set(b),
        DegreeTarget::FamilyMax => family.max_degree(),
    }
}

impl Instance {
    pub fn new(n: usize, forbidden: SetFamily, required: SetFamily) -> Result<Self> {
        validate(RawInstance {
            n,
            attribute_names: None,
            forbidden,
            required,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::NameCountMismatch {
                names: names.len(),
                n: self.n,
            });
        }
        self.attribute_names = Some(names);
        Ok(self)
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, InstanceLoadError> {
        let raw: RawInstance = serde_json::from_str(text)?;
        Ok(validate(raw)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serialization is infallible")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> AttrSet {
        AttrSet::full(self.n)
    }

    pub fn forbidden(&self) -> &SetFamily {
        &self.forbidden
    }

    pub fn required(&self) -> &SetFamily {
        &self.required
    }

    pub fn attribute_names(&self) -> Option<&[String]> {
        self.attribute_names.as_deref()
    }

    /// Replaces F by its minimal sets and A by its maximal sets, then appends
    /// `{i}` for every attribute no required set mentions, in increasing `i`.
    /// When A already spans the universe the result has exactly the
    /// coverings of `self`; otherwise every attribute is now required.
    pub fn normalize(&self) -> Instance {
        let forbidden = self.forbidden.minimal();
        let mut required = self.required.maximal();
        let uncovered = self.universe().difference(required.union());
        for i in uncovered {
            required.push(AttrSet::singleton(i));
        }
        Instance {
            n: self.n,
            attribute_names: self.attribute_names.clone(),
            forbidden,
            required,
        }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// First pair (forbidden, required) with the forbidden set inside the
    /// required one. No such pair means a covering exists (A itself is one).
    pub fn feasibility_violation(&self) -> Option<(AttrSet, AttrSet)> {
        self.forbidden.iter().find_map(|&f| {
            self.required
                .iter()
                .find(|&&b| f.is_subset(b))
                .map(|&b| (f, b))
        })
    }

    pub fn is_feasible(&self) -> bool {
        self.feasibility_violation().is_none()
    }

    pub(crate) fn ensure_feasible(&self) -> Result<()> {
        match self.feasibility_violation() {
            None => Ok(()),
            Some((forbidden, required)) => Err(Error::InfeasibleInstance {
                forbidden,
                required,
            }),
        }
    }

    /// Whether `fragment` contains no forbidden set.
    pub fn is_admissible(&self, fragment: AttrSet) -> bool {
        !self.forbidden.iter().any(|f| f.is_subset(fragment))
    }

    /// Both covering conditions: no fragment contains a forbidden set, and
    /// every required set lies inside some fragment.
    pub fn is_covering(&self, covering: &Covering) -> bool {
        let universe = self.universe();
        let frags = covering.fragments();
        frags
            .iter()
            .all(|&x| x.is_subset(universe) && self.is_admissible(x))
            && self
                .required
                .iter()
                .all(|&b| frags.iter().any(|&x| b.is_subset(x)))
    }

    /// True when every covering of `self` is also a covering of `other`:
    /// each forbidden set of `other` contains one of ours and each required
    /// set of `other` sits inside one of ours.
    pub fn dominates(&self, other: &Instance) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::UniverseMismatch(self.n, other.n));
        }
        let forb = other
            .forbidden
            .iter()
            .all(|&f2| self.forbidden.iter().any(|&f| f.is_subset(f2)));
        let req = other
            .required
            .iter()
            .all(|&b2| self.required.iter().any(|&b| b2.is_subset(b)));
        Ok(forb && req)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InstanceLoadError {
    #[error("malformed instance JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// `{P ∖ {i} : i ∈ chosen}`, a covering of `({chosen}, family ∖ {chosen})`
/// whenever `family` is an antichain.
pub fn punctured_covering(n: usize, family: &SetFamily, chosen: AttrSet) -> Result<Covering> {
    if n > MAX_ATTRIBUTES {
        return Err(Error::UniverseTooLarge(n));
    }
    if !family.is_antichain() {
        return Err(Error::NotAntichain);
    }
    if !family.contains(chosen) {
        return Err(Error::ChosenNotInFamily);
    }
    let universe = AttrSet::full(n);
    Ok(Covering::new(
        chosen
            .iter()
            .map(|i| {
                let mut x = universe;
                x.remove(i);
                x
            })
            .collect(),
    ))
}
