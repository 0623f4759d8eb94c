//! Encoding of the covering problem with `k` fragments as a polynomial ideal.
//!
//! Variable `x_{i,j}` is 1 iff attribute `i` lies in fragment (color) `j`.
//! Two generator families:
//! * for every forbidden set F and color j, `∏_{i∈F} x_{i,j}`: no color
//!   class contains F;
//! * for every required set B, `∏_j (∏_{i∈B} x_{i,j} + 1)`: some color
//!   class contains B.

use std::fmt::Write as _;

use crate::algebra::poly::{BoolMonomial, BoolPoly, MAX_VARS};
use crate::error::{Error, Result};
use crate::instance::Instance;

/// Variable `x_{attribute,color}`; colors are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub attribute: usize,
    pub color: usize,
}

/// Maps variables to bit indices ordered by (color, attribute).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarLayout {
    pub n: usize,
    pub k: usize,
}

impl VarLayout {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let vars = n * k;
        if vars > MAX_VARS {
            return Err(Error::VariableCapExceeded {
                vars,
                cap: MAX_VARS,
            });
        }
        Ok(VarLayout { n, k })
    }

    pub fn num_vars(&self) -> usize {
        self.n * self.k
    }

    pub fn index(&self, v: VarId) -> usize {
        debug_assert!(v.attribute < self.n && (1..=self.k).contains(&v.color));
        (v.color - 1) * self.n + v.attribute
    }

    pub fn var(&self, index: usize) -> VarId {
        VarId {
            attribute: index % self.n,
            color: index / self.n + 1,
        }
    }

    pub fn monomial(&self, vars: impl IntoIterator<Item = VarId>) -> BoolMonomial {
        BoolMonomial::from_vars(vars.into_iter().map(|v| self.index(v)))
    }

    /// `x_i_j*x_i_j` in variable order, or `1`.
    pub fn format_monomial(&self, m: BoolMonomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.vars()
            .map(|v| {
                let id = self.var(v);
                format!("x_{}_{}", id.attribute, id.color)
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Terms from the leading monomial down, joined by `+`; `0` for zero.
    pub fn format_poly(&self, p: &BoolPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        p.monomials()
            .map(|m| self.format_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerators {
    pub layout: VarLayout,
    /// One per (color, forbidden set), colors outermost.
    pub g1: Vec<BoolPoly>,
    /// One per required set.
    pub g2: Vec<BoolPoly>,
}

impl IdealGenerators {
    pub fn k(&self) -> usize {
        self.layout.k
    }

    pub fn n(&self) -> usize {
        self.layout.n
    }

    pub fn all(&self) -> impl Iterator<Item = &BoolPoly> {
        self.g1.iter().chain(self.g2.iter())
    }

    /// One polynomial per line, G1 first.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for p in self.all() {
            writeln!(out, "{}", self.layout.format_poly(p)).unwrap();
        }
        out
    }
}

/// Generators of the `k`-color ideal of `instance`, taken as given (callers
/// wanting every attribute colored should normalize first).
pub fn encode_ideal(instance: &Instance, k: usize) -> Result<IdealGenerators> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let layout = VarLayout::new(instance.n(), k)?;
    let monochrome = |set: crate::attrset::AttrSet, color: usize| {
        layout.monomial(set.iter().map(|attribute| VarId { attribute, color }))
    };
    let g1 = (1..=k)
        .flat_map(|color| {
            instance
                .forbidden()
                .iter()
                .map(move |&f| BoolPoly::from(monochrome(f, color)))
        })
        .collect();
    let g2 = instance
        .required()
        .iter()
        .map(|&b| {
            (1..=k).fold(BoolPoly::one(), |acc, color| {
                let factor = &BoolPoly::from(monochrome(b, color)) + &BoolPoly::one();
                &acc * &factor
            })
        })
        .collect();
    Ok(IdealGenerators { layout, g1, g2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attrset::family;

    #[test]
    fn single_vertex_single_color() {
        let inst = Instance::new(1, family(&[]), family(&[&[0]])).unwrap();
        let gens = encode_ideal(&inst, 1).unwrap();
        assert!(gens.g1.is_empty());
        assert_eq!(gens.dump(), "x_0_1 + 1\n");
    }

    #[test]
    fn generator_counts_and_degrees() {
        let inst = Instance::new(
            6,
            family(&[&[0, 2, 3], &[0, 1, 2], &[0, 1, 4], &[1, 2, 3]]),
            family(&[&[1, 2, 5], &[1, 3, 5], &[0, 2, 5], &[4]]),
        )
        .unwrap();
        let gens = encode_ideal(&inst, 3).unwrap();
        assert_eq!(gens.g1.len(), 4 * 3);
        assert_eq!(gens.g2.len(), 4);
        assert!(gens.g2.iter().all(|p| p.degree() <= 3 * 3));
        assert_eq!(gens.g2[0].len(), 8);
    }

    #[test]
    fn layout_round_trips() {
        let layout = VarLayout::new(5, 3).unwrap();
        for idx in 0..15 {
            assert_eq!(layout.index(layout.var(idx)), idx);
        }
        assert!(VarLayout::new(65, 2).is_err());
    }
}
