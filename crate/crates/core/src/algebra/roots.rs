//! Common roots of an ideal's generators by backtracking.

use serde::{Deserialize, Serialize};

use crate::algebra::coloring::Assignment;
use crate::algebra::ideal::IdealGenerators;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraLimits {
    /// Largest variable count accepted by root enumeration.
    pub var_cap: usize,
    /// Search-tree nodes allowed per root enumeration.
    pub max_nodes: u64,
    /// Critical pairs allowed per Gröbner basis computation.
    pub max_pairs: u64,
}

impl Default for AlgebraLimits {
    fn default() -> Self {
        AlgebraLimits {
            var_cap: 24,
            max_nodes: 50_000_000,
            max_pairs: 1_000_000,
        }
    }
}

/// All common roots, in increasing order of their bit patterns.
pub fn enumerate_roots(gens: &IdealGenerators, limits: &AlgebraLimits) -> Result<Vec<Assignment>> {
    search_roots(gens, limits, usize::MAX)
}

/// Whether any common root exists.
pub fn has_root(gens: &IdealGenerators, limits: &AlgebraLimits) -> Result<bool> {
    Ok(!search_roots(gens, limits, 1)?.is_empty())
}

fn search_roots(
    gens: &IdealGenerators,
    limits: &AlgebraLimits,
    max_roots: usize,
) -> Result<Vec<Assignment>> {
    let vars = gens.layout.num_vars();
    if vars > limits.var_cap {
        return Err(Error::VariableCapExceeded {
            vars,
            cap: limits.var_cap,
        });
    }
    // A generator is decided once its highest variable is assigned.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); vars];
    let polys: Vec<_> = gens.all().cloned().collect();
    for (idx, p) in polys.iter().enumerate() {
        let support = p.support();
        if support == 0 {
            if p.is_one() {
                return Ok(Vec::new());
            }
            continue;
        }
        let last = 127 - support.leading_zeros() as usize;
        checks[last].push(idx);
    }

    let mut walk = RootWalk {
        polys: &polys,
        checks: &checks,
        vars,
        nodes: 0,
        max_nodes: limits.max_nodes,
        max_roots,
        roots: Vec::new(),
    };
    if !walk.descend(0, 0) {
        return Err(Error::BudgetExceeded);
    }
    walk.roots.sort_unstable();
    Ok(walk
        .roots
        .into_iter()
        .map(|bits| Assignment {
            layout: gens.layout,
            bits,
        })
        .collect())
}

struct RootWalk<'a> {
    polys: &'a [crate::algebra::poly::BoolPoly],
    checks: &'a [Vec<usize>],
    vars: usize,
    nodes: u64,
    max_nodes: u64,
    max_roots: usize,
    roots: Vec<u128>,
}

impl RootWalk<'_> {
    // Returns false when the node budget runs out.
    fn descend(&mut self, var: usize, bits: u128) -> bool {
        if self.roots.len() >= self.max_roots {
            return true;
        }
        if var == self.vars {
            self.roots.push(bits);
            return true;
        }
        for value in [false, true] {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return false;
            }
            let next = if value { bits | 1u128 << var } else { bits };
            if self.checks[var].iter().any(|&g| self.polys[g].eval(next)) {
                continue;
            }
            if !self.descend(var + 1, next) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ideal::encode_ideal;
    use crate::attrset::family;
    use crate::instance::Instance;

    #[test]
    fn single_vertex_has_one_root() {
        let inst = Instance::new(1, family(&[]), family(&[&[0]])).unwrap();
        let gens = encode_ideal(&inst, 1).unwrap();
        let roots = enumerate_roots(&gens, &AlgebraLimits::default()).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].bits, 1);
    }

    #[test]
    fn cap_and_budget() {
        let inst = Instance::new(5, family(&[]), family(&[&[0, 1, 2, 3, 4]])).unwrap();
        let gens = encode_ideal(&inst, 5).unwrap();
        assert_eq!(
            enumerate_roots(&gens, &AlgebraLimits::default()),
            Err(Error::VariableCapExceeded { vars: 25, cap: 24 })
        );
        let gens = encode_ideal(&inst, 3).unwrap();
        let tiny = AlgebraLimits {
            max_nodes: 10,
            ..AlgebraLimits::default()
        };
        assert_eq!(enumerate_roots(&gens, &tiny), Err(Error::BudgetExceeded));
    }
}
