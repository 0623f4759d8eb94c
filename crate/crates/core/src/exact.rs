//! Exact search for optimal coverings.
//!
//! Any covering can be shrunk, fragment by fragment, to the union of the
//! required sets it contains without breaking either covering condition.
//! Optimal coverings therefore arise from partitions of the required family
//! into groups whose unions contain no forbidden set, and the search only
//! enumerates such partitions. Groups are opened in restricted-growth order
//! (a set may join an open group or open the next one), which removes the
//! group-relabelling symmetry.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::attrset::AttrSet;
use crate::bounds::lower_bound;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::greedy::heuristic_order;
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveLimits {
    /// Search-tree nodes allowed per call.
    pub max_nodes: u64,
    /// Largest covering size considered.
    pub max_k: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_nodes: 50_000_000,
            max_k: 128,
        }
    }
}

impl SolveLimits {
    pub fn with_nodes(max_nodes: u64) -> Self {
        SolveLimits {
            max_nodes,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Covering),
    No,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalReport {
    pub optimal_size: usize,
    pub one_cover: Covering,
    pub canonical_optimal_covers: Option<BTreeSet<Covering>>,
    pub nodes_explored: u64,
}

// Cap on remembered dead states per decision call.
const NOGOOD_CAPACITY: usize = 1 << 20;

struct PartitionSearch {
    items: Vec<AttrSet>,
    // forbidden sets meeting each item; only these can appear when the item
    // joins an admissible group
    touching: Vec<Vec<AttrSet>>,
    groups: Vec<AttrSet>,
    limit: usize,
    nodes: u64,
    max_nodes: u64,
    nogoods: HashSet<(usize, Vec<AttrSet>)>,
    solution: Option<Vec<AttrSet>>,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl PartitionSearch {
    fn new(instance: &Instance, limit: usize, max_nodes: u64) -> Self {
        let items = heuristic_order(instance).into_sets();
        let touching = items
            .iter()
            .map(|&b| {
                instance
                    .forbidden()
                    .iter()
                    .copied()
                    .filter(|f| f.intersects(b))
                    .collect()
            })
            .collect();
        PartitionSearch {
            items,
            touching,
            groups: Vec::with_capacity(limit),
            limit,
            nodes: 0,
            max_nodes,
            nogoods: HashSet::new(),
            solution: None,
        }
    }

    fn fits(&self, depth: usize, group: AttrSet) -> bool {
        let merged = group.union(self.items[depth]);
        !self.touching[depth].iter().any(|f| f.is_subset(merged))
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.max_nodes
    }

    fn decide(&mut self, depth: usize) -> Step {
        if depth == self.items.len() {
            self.solution = Some(self.groups.clone());
            return Step::Found;
        }
        if !self.tick() {
            return Step::OutOfBudget;
        }
        let b = self.items[depth];
        // Placing b where it is already contained changes no union, and
        // every other placement only enlarges one; nothing else to try.
        if self.groups.iter().any(|&g| b.is_subset(g)) {
            return self.decide(depth + 1);
        }
        let mut key = self.groups.clone();
        key.sort_unstable();
        let key = (depth, key);
        if self.nogoods.contains(&key) {
            return Step::Dead;
        }
        for g in 0..self.groups.len() {
            if !self.fits(depth, self.groups[g]) {
                continue;
            }
            let saved = self.groups[g];
            self.groups[g] = saved.union(b);
            let step = self.decide(depth + 1);
            self.groups[g] = saved;
            match step {
                Step::Dead => {}
                other => return other,
            }
        }
        if self.groups.len() < self.limit {
            self.groups.push(b);
            let step = self.decide(depth + 1);
            self.groups.pop();
            match step {
                Step::Dead => {}
                other => return other,
            }
        }
        if self.nogoods.len() < NOGOOD_CAPACITY {
            self.nogoods.insert(key);
        }
        Step::Dead
    }

    fn enumerate(&mut self, depth: usize, out: &mut BTreeSet<Covering>) -> bool {
        if !self.tick() {
            return false;
        }
        if self.items.len() - depth < self.limit - self.groups.len() {
            return true;
        }
        if depth == self.items.len() {
            out.insert(Covering::new(self.groups.clone()).canonical());
            return true;
        }
        let b = self.items[depth];
        for g in 0..self.groups.len() {
            if !self.fits(depth, self.groups[g]) {
                continue;
            }
            let saved = self.groups[g];
            self.groups[g] = saved.union(b);
            let ok = self.enumerate(depth + 1, out);
            self.groups[g] = saved;
            if !ok {
                return false;
            }
        }
        if self.groups.len() < self.limit {
            self.groups.push(b);
            let ok = self.enumerate(depth + 1, out);
            self.groups.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Decides whether a covering with at most `t` fragments exists.
///
/// `Yes` carries such a covering, built from group unions. Exhausting the
/// node budget yields `BudgetExceeded`, never a guess.
pub fn decide_cover_exists(instance: &Instance, t: usize, limits: &SolveLimits) -> Decision {
    if !instance.is_feasible() {
        return Decision::No;
    }
    decide_normalized(&instance.normalize(), t, limits.max_nodes).0
}

fn decide_normalized(inst: &Instance, t: usize, max_nodes: u64) -> (Decision, u64) {
    let mut search = PartitionSearch::new(inst, t, max_nodes);
    let decision = match search.decide(0) {
        Step::Found => Decision::Yes(Covering::new(search.solution.take().unwrap_or_default())),
        Step::Dead => Decision::No,
        Step::OutOfBudget => Decision::BudgetExceeded,
    };
    (decision, search.nodes)
}

/// Smallest covering size, found by raising `t` from the lower bound until
/// the decision search succeeds.
pub fn optimal_cover(instance: &Instance, limits: &SolveLimits) -> Result<OptimalReport> {
    instance.ensure_feasible()?;
    let inst = instance.normalize();
    let m = inst.required().len();
    let mut nodes = 0u64;
    let start = lower_bound(&inst);
    for t in start..=m {
        if t > limits.max_k {
            return Err(Error::BudgetExceeded);
        }
        let (decision, used) = decide_normalized(&inst, t, limits.max_nodes.saturating_sub(nodes));
        nodes += used;
        match decision {
            Decision::Yes(cover) => {
                return Ok(OptimalReport {
                    optimal_size: t,
                    one_cover: cover,
                    canonical_optimal_covers: None,
                    nodes_explored: nodes,
                })
            }
            Decision::No => {}
            Decision::BudgetExceeded => return Err(Error::BudgetExceeded),
        }
    }
    unreachable!("a feasible instance is covered by its own required family")
}

/// Every covering obtained from a partition of A into exactly `t` groups
/// with admissible unions, as canonical families without repeats.
pub fn enumerate_covers_of_size(
    instance: &Instance,
    t: usize,
    limits: &SolveLimits,
) -> Result<BTreeSet<Covering>> {
    instance.ensure_feasible()?;
    let inst = instance.normalize();
    let mut search = PartitionSearch::new(&inst, t, limits.max_nodes);
    let mut out = BTreeSet::new();
    if search.enumerate(0, &mut out) {
        Ok(out)
    } else {
        Err(Error::BudgetExceeded)
    }
}

/// Optimal size plus all canonical optimal coverings.
pub fn enumerate_optimal_covers(
    instance: &Instance,
    limits: &SolveLimits,
) -> Result<OptimalReport> {
    let mut report = optimal_cover(instance, limits)?;
    let remaining = SolveLimits {
        max_nodes: limits.max_nodes.saturating_sub(report.nodes_explored),
        ..*limits
    };
    let covers = enumerate_covers_of_size(instance, report.optimal_size, &remaining)?;
    report.canonical_optimal_covers = Some(covers);
    Ok(report)
}
