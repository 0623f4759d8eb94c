//! Boolean-ring formulation: coverings with `k` fragments are exactly the
//! common roots of an ideal in `F2[x_{i,j}]/(x² + x)`.

pub mod coloring;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod roots;

use serde::{Deserialize, Serialize};

pub use coloring::{
    covering_to_multicoloring, multicoloring_to_covering, Assignment, MultiColoring,
};
pub use groebner::{buchberger_feasible, groebner_basis, GroebnerOutcome};
pub use ideal::{encode_ideal, IdealGenerators, VarId, VarLayout};
pub use poly::{BoolMonomial, BoolPoly};
pub use roots::{enumerate_roots, has_root, AlgebraLimits};

use crate::error::{Error, Result};
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraicMethod {
    Buchberger,
    RootEnumeration,
    /// Root enumeration while `k·n` fits the variable cap, Buchberger beyond.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicReport {
    pub k: usize,
    /// Method that settled the final `k`.
    pub method: AlgebraicMethod,
}

/// Whether the `k`-color ideal of `instance` has a common root.
pub fn ideal_has_root(
    instance: &Instance,
    k: usize,
    limits: &AlgebraLimits,
    method: AlgebraicMethod,
) -> Result<(bool, AlgebraicMethod)> {
    let gens = encode_ideal(instance, k)?;
    let method = match method {
        AlgebraicMethod::Auto if gens.layout.num_vars() <= limits.var_cap => {
            AlgebraicMethod::RootEnumeration
        }
        AlgebraicMethod::Auto => AlgebraicMethod::Buchberger,
        m => m,
    };
    let feasible = match method {
        AlgebraicMethod::RootEnumeration => has_root(&gens, limits)?,
        _ => match buchberger_feasible(&gens, limits) {
            GroebnerOutcome::Feasible(_) => true,
            GroebnerOutcome::Infeasible => false,
            GroebnerOutcome::BudgetExceeded => return Err(Error::BudgetExceeded),
        },
    };
    Ok((feasible, method))
}

/// Smallest `k` whose ideal has a common root, trying `k = 1, 2, …` on the
/// normalized instance.
pub fn algebraic_optimal_size(
    instance: &Instance,
    limits: &AlgebraLimits,
    method: AlgebraicMethod,
) -> Result<AlgebraicReport> {
    instance.ensure_feasible()?;
    let inst = instance.normalize();
    let m = inst.required().len();
    if m == 0 {
        return Ok(AlgebraicReport { k: 0, method });
    }
    for k in 1..=m {
        let (feasible, used) = ideal_has_root(&inst, k, limits, method)?;
        if feasible {
            return Ok(AlgebraicReport { k, method: used });
        }
    }
    unreachable!("the required family itself gives a root with |A| colors")
}
