//! Greedy covering construction and its degree-sorted variant.
//!
//! The greedy pass walks the required family in order. A required set that
//! already sits inside a fragment is skipped; otherwise it is merged into the
//! first fragment whose union with it stays free of forbidden sets, or opens
//! a new fragment when no such fragment exists. The heuristic variant first
//! stable-sorts the required sets by how many forbidden sets they meet,
//! largest first.

use serde::{Deserialize, Serialize};

use crate::attrset::{AttrSet, SetFamily};
use crate::covering::Covering;
use crate::error::Result;
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GreedyAction {
    MergedInto(usize),
    AlreadyContained,
    AppendedNew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    /// Position of the set in the instance's required family.
    pub required_index: usize,
    pub action: GreedyAction,
}

/// One step per required set, in processing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
}

/// Greedy construction over the required family in its stored order.
pub fn greedy_cover(instance: &Instance) -> Result<(Covering, GreedyTrace)> {
    let order: Vec<usize> = (0..instance.required().len()).collect();
    greedy_with_order(instance, &order)
}

/// Greedy construction after stable-sorting A by descending `deg_B(F)`.
pub fn heuristic_cover(instance: &Instance) -> Result<(Covering, GreedyTrace)> {
    greedy_with_order(instance, &heuristic_permutation(instance))
}

/// Indices of A sorted by descending `deg_B(F)`; ties keep input order.
pub fn heuristic_permutation(instance: &Instance) -> Vec<usize> {
    let forbidden = instance.forbidden();
    let mut order: Vec<usize> = (0..instance.required().len()).collect();
    let required = instance.required().sets();
    order.sort_by_key(|&i| std::cmp::Reverse(forbidden.degree_of_set(required[i])));
    order
}

/// The required family in heuristic order.
pub fn heuristic_order(instance: &Instance) -> SetFamily {
    let required = instance.required().sets();
    heuristic_permutation(instance)
        .into_iter()
        .map(|i| required[i])
        .collect()
}

/// Runs the greedy pass over `order`, a sequence of indices into A.
/// `order` need not be a permutation, but the result only covers the sets
/// it visits.
pub fn greedy_with_order(instance: &Instance, order: &[usize]) -> Result<(Covering, GreedyTrace)> {
    instance.ensure_feasible()?;
    let forbidden = instance.forbidden().sets();
    let required = instance.required().sets();

    let mut fragments: Vec<AttrSet> = Vec::new();
    let mut steps = Vec::with_capacity(order.len());
    let mut touching: Vec<AttrSet> = Vec::new();

    for &idx in order {
        let b = required[idx];
        let action = if fragments.iter().any(|&x| b.is_subset(x)) {
            GreedyAction::AlreadyContained
        } else {
            // Fragments are already free of forbidden sets, so only the
            // forbidden sets meeting b can appear inside x ∪ b.
            touching.clear();
            touching.extend(forbidden.iter().copied().filter(|f| f.intersects(b)));
            let slot = fragments.iter().position(|&x| {
                let merged = x.union(b);
                !touching.iter().any(|f| f.is_subset(merged))
            });
            match slot {
                Some(pos) => {
                    fragments[pos] = fragments[pos].union(b);
                    GreedyAction::MergedInto(pos)
                }
                None => {
                    fragments.push(b);
                    GreedyAction::AppendedNew
                }
            }
        };
        steps.push(GreedyStep {
            required_index: idx,
            action,
        });
    }
    Ok((Covering::new(fragments), GreedyTrace { steps }))
}

/// Checks `|C| ≤ k·deg(F)·deg(A) + 1` and `deg_v(C) ≤ deg_v(A)` for every
/// attribute, with `k` the largest required set of `instance`.
pub fn verify_greedy_guarantee(instance: &Instance, covering: &Covering) -> bool {
    let required = instance.required();
    let k = required.max_set_size();
    let size_bound = k * instance.forbidden().max_degree() * required.max_degree() + 1;
    covering.len() <= size_bound
        && (0..instance.n()).all(|v| covering.degree_of(v) <= required.degree_of(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attrset::family;
    use crate::error::Error;

    fn small_example() -> Instance {
        Instance::new(4, family(&[&[0, 1, 2]]), family(&[&[0, 3], &[1, 3], &[2]])).unwrap()
    }

    fn medical() -> Instance {
        Instance::new(
            6,
            family(&[&[0, 2, 3], &[0, 1, 2], &[0, 1, 4], &[1, 2, 3]]),
            family(&[&[1, 2, 5], &[1, 3, 5], &[0, 2, 5], &[4]]),
        )
        .unwrap()
    }

    fn cover(sets: &[&[usize]]) -> Covering {
        Covering::new(family(sets).into_sets())
    }

    #[test]
    fn greedy_small_example() {
        let (c, trace) = greedy_cover(&small_example()).unwrap();
        assert_eq!(c, cover(&[&[0, 1, 3], &[2]]));
        let actions: Vec<_> = trace.steps.iter().map(|s| s.action).collect();
        assert_eq!(
            actions,
            vec![
                GreedyAction::AppendedNew,
                GreedyAction::MergedInto(0),
                GreedyAction::AppendedNew
            ]
        );
        assert!(verify_greedy_guarantee(&small_example(), &c));
    }

    #[test]
    fn greedy_medical() {
        let inst = medical();
        let (c, _) = greedy_cover(&inst).unwrap();
        assert_eq!(c, cover(&[&[1, 2, 4, 5], &[1, 3, 5], &[0, 2, 5]]));
        assert!(inst.is_covering(&c));
        assert!(verify_greedy_guarantee(&inst, &c));
    }

    #[test]
    fn greedy_without_forbidden_merges_everything() {
        let inst = Instance::new(3, family(&[]), family(&[&[0], &[1], &[2]])).unwrap();
        let (c, _) = greedy_cover(&inst).unwrap();
        assert_eq!(c, cover(&[&[0, 1, 2]]));
    }

    #[test]
    fn already_contained_adds_nothing() {
        let inst = Instance::new(3, family(&[]), family(&[&[0, 1], &[1]])).unwrap();
        let (c, trace) = greedy_cover(&inst).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(trace.steps[1].action, GreedyAction::AlreadyContained);
    }

    #[test]
    fn heuristic_examples() {
        let (c, trace) = heuristic_cover(&small_example()).unwrap();
        assert_eq!(c, cover(&[&[0, 1, 3], &[2]]));
        let idx: Vec<_> = trace.steps.iter().map(|s| s.required_index).collect();
        assert_eq!(idx, vec![0, 1, 2]);

        let (c, _) = heuristic_cover(&medical()).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(heuristic_permutation(&medical()), vec![0, 1, 2, 3]);
    }

    #[test]
    fn heuristic_sorts_stably_by_forbidden_degree() {
        let inst = Instance::new(
            5,
            family(&[&[0, 1], &[1, 2], &[3, 4]]),
            family(&[&[0, 4], &[2], &[1, 3], &[0, 2]]),
        )
        .unwrap();
        // degrees: {0,4}→2, {2}→1, {1,3}→3, {0,2}→2
        assert_eq!(heuristic_permutation(&inst), vec![2, 0, 3, 1]);
    }

    #[test]
    fn infeasible_is_rejected() {
        let inst = Instance::new(4, family(&[&[1, 2]]), family(&[&[1, 2, 3]])).unwrap();
        assert!(matches!(
            greedy_cover(&inst),
            Err(Error::InfeasibleInstance { .. })
        ));
        assert!(matches!(
            heuristic_cover(&inst),
            Err(Error::InfeasibleInstance { .. })
        ));
    }

    #[test]
    fn guarantee_for_whole_universe() {
        let inst = Instance::new(3, family(&[&[0, 1, 2]]), family(&[&[0, 1], &[2]])).unwrap();
        assert!(verify_greedy_guarantee(&inst, &cover(&[&[0, 1, 2]])));
        // two copies of attribute 2 exceed deg_2(A) = 1
        assert!(!verify_greedy_guarantee(&inst, &cover(&[&[0, 1, 2], &[2]])));
    }
}
