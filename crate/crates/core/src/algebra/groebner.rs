//! Buchberger completion in the Boolean quotient ring `F2[X]/(x² + x)`.
//!
//! Polynomials stay multilinear, which bakes the field equations into the
//! arithmetic. Completeness then needs, besides the usual S-polynomials,
//! the products `x·g` for every variable `x` of the leading monomial of `g`
//! (the critical pairs of `g` with `x² + x`). S-pairs go through the
//! Gebauer–Möller update: coprime leading monomials and pairs whose lcm is
//! covered by a chain through another element are dropped. The field
//! relations never take part in a chain, since `x²` divides no multilinear
//! lcm, so their pairs are always kept.
//!
//! The monomial order is graded reverse-lexicographic, so multiplying `g` by
//! a monomial disjoint from its leading monomial keeps that product on top;
//! ordinary top-reduction is therefore sound in the quotient.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::algebra::ideal::IdealGenerators;
use crate::algebra::poly::{BoolMonomial, BoolPoly};
use crate::algebra::roots::AlgebraLimits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerOutcome {
    /// Reduced basis of a proper ideal: common roots exist.
    Feasible(Vec<BoolPoly>),
    /// The ideal is `(1)`.
    Infeasible,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Pair {
    Spoly(usize, usize),
    Field(usize, usize),
}

/// Feasibility of the ideal through its reduced Gröbner basis.
pub fn buchberger_feasible(gens: &IdealGenerators, limits: &AlgebraLimits) -> GroebnerOutcome {
    let polys: Vec<BoolPoly> = gens.all().cloned().collect();
    groebner_basis(&polys, limits.max_pairs)
}

/// Reduced Gröbner basis of the ideal spanned by `generators`.
pub fn groebner_basis(generators: &[BoolPoly], max_pairs: u64) -> GroebnerOutcome {
    let mut state = Completion {
        basis: Vec::new(),
        active: Vec::new(),
        pairs: BinaryHeap::new(),
        seq: 0,
    };
    for g in generators {
        let r = reduce(g.clone(), &state.basis, &state.active);
        if !r.is_zero() && state.insert(r) {
            return GroebnerOutcome::Infeasible;
        }
    }
    let mut processed = 0u64;
    while let Some(Reverse((_, _, pair))) = state.pairs.pop() {
        processed += 1;
        if processed > max_pairs {
            return GroebnerOutcome::BudgetExceeded;
        }
        let candidate = match pair {
            Pair::Spoly(i, j) => s_polynomial(&state.basis[i], &state.basis[j]),
            Pair::Field(i, var) => state.basis[i].mul_monomial(BoolMonomial::var(var)),
        };
        let r = reduce(candidate, &state.basis, &state.active);
        if !r.is_zero() && state.insert(r) {
            return GroebnerOutcome::Infeasible;
        }
    }
    let kept = state
        .basis
        .into_iter()
        .zip(state.active)
        .filter_map(|(g, on)| on.then_some(g))
        .collect();
    GroebnerOutcome::Feasible(interreduce(kept))
}

struct Completion {
    basis: Vec<BoolPoly>,
    // elements whose leading monomial no later element divides; only these
    // reduce and pair with newcomers
    active: Vec<bool>,
    // smallest lcm first
    pairs: BinaryHeap<Reverse<(BoolMonomial, u64, Pair)>>,
    seq: u64,
}

impl Completion {
    /// Adds a nonzero reduced polynomial and updates the pair queue with the
    /// Gebauer–Möller criteria. Returns true when the polynomial is the
    /// constant 1.
    fn insert(&mut self, p: BoolPoly) -> bool {
        if p.is_one() {
            return true;
        }
        let lm = p.leading().expect("inserted polynomials are nonzero");
        let idx = self.basis.len();

        // new pairs (h, g): keep one pair per minimal lcm
        let cands: Vec<(usize, BoolMonomial, bool)> = (0..idx)
            .filter(|&i| self.active[i])
            .map(|i| {
                let glm = self.basis[i].leading().unwrap();
                (i, glm.mul(lm), glm.is_coprime(lm))
            })
            .collect();
        let mut kept: Vec<(usize, BoolMonomial, bool)> = Vec::new();
        for (pos, &(i, l, coprime)) in cands.iter().enumerate() {
            let dominated = !coprime
                && (cands[pos + 1..].iter().any(|&(_, l2, _)| l2.divides(l))
                    || kept.iter().any(|&(_, l2, _)| l2.divides(l)));
            if !dominated {
                kept.push((i, l, coprime));
            }
        }

        // old pairs made redundant by the newcomer
        let basis = &self.basis;
        self.pairs.retain(|Reverse((l, _, pair))| match *pair {
            Pair::Spoly(i, j) => {
                let li = basis[i].leading().unwrap().mul(lm);
                let lj = basis[j].leading().unwrap().mul(lm);
                !(lm.divides(*l) && li != *l && lj != *l)
            }
            Pair::Field(..) => true,
        });

        for (i, l, coprime) in kept {
            if !coprime {
                self.seq += 1;
                self.pairs.push(Reverse((l, self.seq, Pair::Spoly(i, idx))));
            }
        }
        for var in lm.vars() {
            self.seq += 1;
            self.pairs
                .push(Reverse((lm, self.seq, Pair::Field(idx, var))));
        }
        for i in 0..idx {
            if self.active[i] && lm.divides(self.basis[i].leading().unwrap()) {
                self.active[i] = false;
            }
        }
        self.basis.push(p);
        self.active.push(true);
        false
    }
}

fn s_polynomial(f: &BoolPoly, g: &BoolPoly) -> BoolPoly {
    let (flm, glm) = (f.leading().unwrap(), g.leading().unwrap());
    let lcm = flm.mul(glm);
    f.mul_monomial(flm.cofactor_in(lcm))
        .add(&g.mul_monomial(glm.cofactor_in(lcm)))
}

/// Full reduction of `p` modulo the active elements of `basis`.
fn reduce(mut p: BoolPoly, basis: &[BoolPoly], active: &[bool]) -> BoolPoly {
    let reducers: Vec<(BoolMonomial, &BoolPoly)> = basis
        .iter()
        .zip(active)
        .filter(|&(_, &on)| on)
        .map(|(g, _)| (g.leading().unwrap(), g))
        .collect();
    let (mut scratch, mut spare) = (Vec::new(), Vec::new());
    let mut remainder: Vec<BoolMonomial> = Vec::new();
    while let Some(lm) = p.leading() {
        match reducers.iter().find(|(glm, _)| glm.divides(lm)) {
            Some(&(glm, g)) => p.add_multiple(g, glm.cofactor_in(lm), &mut scratch, &mut spare),
            None => {
                p.pop_leading();
                remainder.push(lm);
            }
        }
    }
    remainder.reverse();
    BoolPoly::from_sorted_ascending(remainder)
}

fn interreduce(basis: Vec<BoolPoly>) -> Vec<BoolPoly> {
    // drop elements whose leading monomial another element divides
    let mut minimal: Vec<BoolPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hlm = h.leading().unwrap();
            j != i && hlm.divides(lm) && (hlm != lm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<BoolPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<BoolPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let g = &minimal[i];
            let lm = g.leading().unwrap();
            // keep the leading monomial, reduce the tail
            let tail = g.add(&BoolPoly::from(lm));
            reduce(tail, &others, &vec![true; others.len()]).add(&BoolPoly::from(lm))
        })
        .collect();
    reduced.sort_by_key(|g| Reverse(g.leading().unwrap()));
    reduced
}

/// Whether `p` lies in the ideal whose Gröbner basis is `basis`.
pub fn ideal_contains(basis: &[BoolPoly], p: &BoolPoly) -> bool {
    reduce(p.clone(), basis, &vec![true; basis.len()]).is_zero()
}
