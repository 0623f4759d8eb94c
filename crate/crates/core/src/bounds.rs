//! Closed-form bounds on the size of an optimal covering.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::greedy::heuristic_order;
use crate::instance::Instance;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// Minimum-degree style lower bound, rounded up.
    pub lower: usize,
    /// `k·deg(F)·deg(A) + 1`, met by the greedy construction in any order.
    pub greedy_upper: usize,
    /// `max_i min(deg_{B_i}(F)·deg(A) + 1, i)` over A in heuristic order.
    pub heuristic_upper: usize,
    /// Step-by-step refinement of `heuristic_upper`.
    pub refined_upper: usize,
    /// Size of the probabilistic construction, `2(2kd)^k ln n`.
    pub probabilistic_size_bound: f64,
    /// Degree of the probabilistic construction, `2(2kd)^(k-1) ln n`.
    pub probabilistic_degree_bound: f64,
    /// Largest required set.
    pub k: usize,
    /// Largest set in either family (the `k` of the probabilistic bounds).
    pub k_any: usize,
    pub deg_forbidden: usize,
    pub deg_required: usize,
}

/// Computes every bound on the normalized form of `instance`.
pub fn bounds(instance: &Instance) -> Result<BoundsReport> {
    instance.ensure_feasible()?;
    let inst = instance.normalize();
    let forbidden = inst.forbidden();
    let required = inst.required();

    let deg_forbidden = forbidden.max_degree();
    let deg_required = required.max_degree();
    let k = required.max_set_size();
    let k_any = k.max(forbidden.max_set_size());

    let lower = lower_bound(&inst);
    let greedy_upper = k * deg_forbidden * deg_required + 1;

    let ordered = heuristic_order(&inst);
    let weights: Vec<usize> = ordered
        .iter()
        .map(|&b| forbidden.degree_of_set(b) * deg_required)
        .collect();
    let heuristic_upper = weights
        .iter()
        .enumerate()
        .map(|(idx, &w)| (w + 1).min(idx + 1))
        .max()
        .unwrap_or(0);
    let refined_upper = refined_bound(&weights);

    let ln_n = (inst.n() as f64).ln();
    let base = 2.0 * k_any as f64 * deg_forbidden as f64;
    let probabilistic_size_bound = 2.0 * base.powi(k_any as i32) * ln_n;
    let probabilistic_degree_bound = 2.0 * base.powi(k_any as i32 - 1) * ln_n;

    Ok(BoundsReport {
        lower,
        greedy_upper,
        heuristic_upper,
        refined_upper,
        probabilistic_size_bound,
        probabilistic_degree_bound,
        k,
        k_any,
        deg_forbidden,
        deg_required,
    })
}

/// `ceil(|A| / (|A| - max_{F} min_{a ∈ F} deg_a(A)))`; 1 when F is empty and
/// 0 when A is. Expects a feasible instance, for which the denominator is
/// positive.
pub fn lower_bound(instance: &Instance) -> usize {
    let required = instance.required();
    let m = required.len();
    if m == 0 {
        return 0;
    }
    let worst = instance
        .forbidden()
        .iter()
        .map(|f| f.iter().map(|a| required.degree_of(a)).min().unwrap_or(0))
        .max();
    match worst {
        None => 1,
        Some(t) => {
            assert!(t < m, "lower bound requires a feasible instance");
            m.div_ceil(m - t)
        }
    }
}

/// Iterates `c ← c` if `w < c` else `c + 1` over the weights
/// `deg_{B_i}(F)·deg(A)`, starting from an empty covering. Each step bounds
/// the fragment count after the greedy pass consumes `B_i`: when more than
/// `w` fragments exist, at least one can absorb `B_i`.
pub fn refined_bound(weights: &[usize]) -> usize {
    weights
        .iter()
        .fold(0, |c, &w| if w < c { c } else { c + 1 })
}
