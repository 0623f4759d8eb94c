//! Reference implementations used to cross-check the library. They favour
//! obviously-correct brute force over speed.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitcover::attrset::{AttrSet, SetFamily};
use splitcover::Instance;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn set(items: &[usize]) -> AttrSet {
    items.iter().copied().collect()
}

pub fn fam(sets: &[&[usize]]) -> SetFamily {
    sets.iter().map(|s| set(s)).collect()
}

/// Every subset of `0..n` as a bitmask, checked one by one.
fn subsets(n: usize) -> impl Iterator<Item = AttrSet> {
    (0u128..1 << n).map(AttrSet::from_bits)
}

fn admissible(forbidden: &[AttrSet], x: AttrSet) -> bool {
    forbidden.iter().all(|&f| !f.is_subset(x))
}

/// Inclusion-maximal subsets of the universe that contain no forbidden set.
pub fn maximal_admissible(inst: &Instance) -> Vec<AttrSet> {
    let n = inst.n();
    let forb = inst.forbidden().sets();
    let adm: Vec<AttrSet> = subsets(n).filter(|&x| admissible(forb, x)).collect();
    adm.iter()
        .copied()
        .filter(|&x| !adm.iter().any(|&y| x.is_proper_subset(y)))
        .collect()
}

/// Smallest number of admissible sets whose members swallow every
/// required set, by trying all combinations of maximal admissible sets.
/// Enlarging a fragment to a maximal admissible superset keeps a covering
/// a covering, so maximal sets suffice.
pub fn naive_optimum(inst: &Instance) -> Option<usize> {
    let req = inst.required().sets();
    if req.is_empty() {
        return Some(0);
    }
    if req.iter().any(|&b| !admissible(inst.forbidden().sets(), b)) {
        return None;
    }
    let pool = maximal_admissible(inst);
    (1..=req.len()).find(|&t| {
        (0..pool.len()).combinations(t).any(|idx| {
            req.iter()
                .all(|&b| idx.iter().any(|&i| b.is_subset(pool[i])))
        })
    })
}

/// Color classes of the bit pattern `bits` with variable `(i, j)` at
/// position `(j - 1)·n + i`.
pub fn classes_of(bits: u128, n: usize, k: usize) -> Vec<AttrSet> {
    (0..k)
        .map(|j| AttrSet::from_bits((bits >> (j * n)) & ((1u128 << n) - 1)))
        .collect()
}

/// Whether the colour classes satisfy the two covering conditions, read
/// straight off the definition.
pub fn classes_cover(inst: &Instance, classes: &[AttrSet]) -> bool {
    classes
        .iter()
        .all(|&x| admissible(inst.forbidden().sets(), x))
        && inst
            .required()
            .iter()
            .all(|&b| classes.iter().any(|&x| b.is_subset(x)))
}

/// All `k`-color assignments that make the classes a covering.
pub fn brute_force_roots(inst: &Instance, k: usize) -> Vec<u128> {
    let vars = inst.n() * k;
    assert!(vars <= 24, "brute force over {vars} variables");
    (0u128..1 << vars)
        .filter(|&bits| classes_cover(inst, &classes_of(bits, inst.n(), k)))
        .collect()
}

/// Random instance on `n` attributes with arbitrary set sizes; forbidden
/// sets have at least two members and A spans the universe (uncovered
/// attributes become singletons). May be infeasible.
pub fn random_instance<R: Rng>(rng: &mut R, n: usize) -> Instance {
    let nf = rng.gen_range(0..=4);
    let na = rng.gen_range(1..=5);
    let mut forbidden = Vec::new();
    while forbidden.len() < nf {
        let s = AttrSet::from_bits(rng.gen_range(0u128..1 << n));
        if s.len() >= 2 {
            forbidden.push(s);
        }
    }
    let mut required = Vec::new();
    while required.len() < na {
        let s = AttrSet::from_bits(rng.gen_range(0u128..1 << n));
        if !s.is_empty() && s.len() <= 3 {
            required.push(s);
        }
    }
    let covered = required.iter().fold(AttrSet::EMPTY, |acc, &b| acc.union(b));
    required.extend(
        AttrSet::full(n)
            .difference(covered)
            .iter()
            .map(AttrSet::singleton),
    );
    Instance::new(
        n,
        SetFamily::from_sets(forbidden),
        SetFamily::from_sets(required),
    )
    .unwrap()
}

/// Like [`random_instance`] but retried until feasible.
pub fn random_feasible<R: Rng>(rng: &mut R, n: usize) -> Instance {
    loop {
        let inst = random_instance(rng, n);
        if inst.is_feasible() {
            return inst;
        }
    }
}
