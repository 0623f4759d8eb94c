use thiserror::Error;

use crate::attrset::AttrSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("forbidden family contains the empty set")]
    EmptyForbiddenSet,
    #[error(
        "forbidden family contains the singleton {{{0}}}; a lone attribute can never be stored"
    )]
    SingletonForbiddenSet(usize),
    #[error("attribute {attribute} is outside the universe 0..{n}")]
    AttributeOutOfRange { attribute: usize, n: usize },
    #[error("universe of {0} attributes exceeds the supported maximum of {max}", max = crate::attrset::MAX_ATTRIBUTES)]
    UniverseTooLarge(usize),
    #[error("attribute_names has {names} entries but the universe has {n} attributes")]
    NameCountMismatch { names: usize, n: usize },
    #[error("instances have different universes ({0} vs {1})")]
    UniverseMismatch(usize, usize),
    #[error("infeasible: forbidden {forbidden} ⊆ required {required}")]
    InfeasibleInstance {
        forbidden: AttrSet,
        required: AttrSet,
    },
    #[error("family is not an antichain")]
    NotAntichain,
    #[error("chosen set is not a member of the family")]
    ChosenNotInFamily,
    #[error("covering has {size} fragments but only {k} colors are available")]
    SizeExceedsK { size: usize, k: usize },
    #[error("{vars} variables exceed the cap of {cap}")]
    VariableCapExceeded { vars: usize, cap: usize },
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("table row {0} does not exist (rows are 1..=5)")]
    RowOutOfRange(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
