//! Multilinear polynomials over F2 with idempotent variables (`x² = x`).
//!
//! A monomial is a set of variable indices, so products are unions; a
//! polynomial is a set of monomials, so sums are symmetric differences.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

/// Most variables a monomial can hold.
pub const MAX_VARS: usize = 128;

/// A product of distinct variables; the empty product is the monomial 1.
///
/// Ordered by degree, then reverse-lexicographically with variable 0 the
/// largest: among monomials of equal degree, the one containing the highest
/// differing variable index is smaller.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BoolMonomial(u128);

impl BoolMonomial {
    pub const ONE: BoolMonomial = BoolMonomial(0);

    pub const fn from_bits(bits: u128) -> Self {
        BoolMonomial(bits)
    }

    pub fn var(index: usize) -> Self {
        assert!(index < MAX_VARS, "variable index {index} out of range");
        BoolMonomial(1u128 << index)
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        vars.into_iter()
            .fold(BoolMonomial::ONE, |m, v| m.mul(BoolMonomial::var(v)))
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, var: usize) -> bool {
        var < MAX_VARS && self.0 & (1u128 << var) != 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: BoolMonomial) -> BoolMonomial {
        BoolMonomial(self.0 | other.0)
    }

    pub fn divides(self, other: BoolMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn cofactor_in(self, other: BoolMonomial) -> BoolMonomial {
        BoolMonomial(other.0 & !self.0)
    }

    pub fn is_coprime(self, other: BoolMonomial) -> bool {
        self.0 & other.0 == 0
    }

    /// True when every variable is set to 1 in `assignment`.
    pub fn eval(self, assignment: u128) -> bool {
        self.0 & !assignment == 0
    }

    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl Ord for BoolMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // at equal degree the highest differing variable decides, and the
        // side holding it is smaller: exactly the order of the complements
        (self.0.count_ones(), !self.0).cmp(&(other.0.count_ones(), !other.0))
    }
}

impl PartialOrd for BoolMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BoolMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (pos, v) in self.vars().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// A polynomial over F2 in idempotent variables. The zero polynomial has no
/// monomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BoolPoly {
    // strictly increasing; the leading monomial is last
    terms: Vec<BoolMonomial>,
}

impl BoolPoly {
    pub fn zero() -> Self {
        BoolPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        BoolPoly::from(BoolMonomial::ONE)
    }

    pub fn var(index: usize) -> Self {
        BoolPoly::from(BoolMonomial::var(index))
    }

    /// Sums the monomials, cancelling repeated ones in pairs.
    pub fn from_monomials<I: IntoIterator<Item = BoolMonomial>>(monomials: I) -> Self {
        let mut terms: Vec<BoolMonomial> = monomials.into_iter().collect();
        terms.sort_unstable();
        cancel_pairs(&mut terms);
        BoolPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<BoolMonomial> {
        self.terms.last().copied()
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Monomials from the leading one down.
    pub fn monomials(&self) -> impl Iterator<Item = BoolMonomial> + '_ {
        self.terms.iter().rev().copied()
    }

    pub fn contains_monomial(&self, m: BoolMonomial) -> bool {
        self.terms.binary_search(&m).is_ok()
    }

    /// Every variable occurring in some monomial.
    pub fn support(&self) -> u128 {
        self.terms.iter().fold(0, |acc, m| acc | m.bits())
    }

    pub fn add(&self, other: &BoolPoly) -> BoolPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        BoolPoly { terms: out }
    }

    pub fn mul(&self, other: &BoolPoly) -> BoolPoly {
        BoolPoly::from_monomials(
            self.terms
                .iter()
                .flat_map(|&m| other.terms.iter().map(move |&n| m.mul(n))),
        )
    }

    pub fn mul_monomial(&self, t: BoolMonomial) -> BoolPoly {
        if t.is_one() {
            return self.clone();
        }
        BoolPoly::from_monomials(self.terms.iter().map(|&m| m.mul(t)))
    }

    /// Value at the point whose set variables are the bits of `assignment`.
    pub fn eval(&self, assignment: u128) -> bool {
        self.terms.iter().filter(|m| m.eval(assignment)).count() % 2 == 1
    }

    pub(crate) fn pop_leading(&mut self) -> Option<BoolMonomial> {
        self.terms.pop()
    }

    /// `self += t·g`, using `scratch` and `spare` as working storage.
    pub(crate) fn add_multiple(
        &mut self,
        g: &BoolPoly,
        t: BoolMonomial,
        scratch: &mut Vec<BoolMonomial>,
        spare: &mut Vec<BoolMonomial>,
    ) {
        scratch.clear();
        scratch.extend(g.terms.iter().map(|&m| m.mul(t)));
        scratch.sort_unstable();
        cancel_pairs(scratch);
        spare.clear();
        let (a, b) = (&self.terms, &*scratch);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    spare.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    spare.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        spare.extend_from_slice(&a[i..]);
        spare.extend_from_slice(&b[j..]);
        std::mem::swap(&mut self.terms, spare);
    }

    pub(crate) fn from_sorted_ascending(terms: Vec<BoolMonomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] < w[1]));
        BoolPoly { terms }
    }
}

/// Drops equal neighbours of a sorted list in pairs, keeping one copy of
/// each run of odd length.
fn cancel_pairs(terms: &mut Vec<BoolMonomial>) {
    let mut kept = 0;
    let mut i = 0;
    while i < terms.len() {
        let mut j = i + 1;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            terms[kept] = terms[i];
            kept += 1;
        }
        i = j;
    }
    terms.truncate(kept);
}

impl From<BoolMonomial> for BoolPoly {
    fn from(m: BoolMonomial) -> Self {
        BoolPoly { terms: vec![m] }
    }
}

impl Add for &BoolPoly {
    type Output = BoolPoly;

    fn add(self, rhs: &BoolPoly) -> BoolPoly {
        BoolPoly::add(self, rhs)
    }
}

impl Mul for &BoolPoly {
    type Output = BoolPoly;

    fn mul(self, rhs: &BoolPoly) -> BoolPoly {
        BoolPoly::mul(self, rhs)
    }
}

impl fmt::Debug for BoolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, m) in self.monomials().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m:?}")?;
        }
        Ok(())
    }
}
