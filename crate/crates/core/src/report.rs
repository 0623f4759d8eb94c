//! JSON shapes printed by the command-line tool.
//!
//! Field order in each struct is the order in the serialized output.

use serde::{Deserialize, Serialize};

use crate::covering::Covering;
use crate::exact::OptimalReport;
use crate::greedy::GreedyTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverMethod {
    Greedy,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub fragments: Vec<Vec<usize>>,
    pub size: usize,
    pub method: CoverMethod,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<GreedyTrace>,
}

impl CoveringReport {
    pub fn new(covering: &Covering, method: CoverMethod, trace: Option<GreedyTrace>) -> Self {
        CoveringReport {
            fragments: covering.to_vecs(),
            size: covering.len(),
            method,
            trace,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactReport {
    pub optimal_size: usize,
    pub cover: Vec<Vec<usize>>,
    /// Null unless optimal covers were enumerated.
    #[serde(default)]
    pub num_canonical_optimal: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_optimal_covers: Option<Vec<Vec<Vec<usize>>>>,
    pub nodes: u64,
}

impl From<&OptimalReport> for ExactReport {
    fn from(r: &OptimalReport) -> Self {
        ExactReport {
            optimal_size: r.optimal_size,
            cover: r.one_cover.to_vecs(),
            num_canonical_optimal: r.canonical_optimal_covers.as_ref().map(|s| s.len()),
            canonical_optimal_covers: r
                .canonical_optimal_covers
                .as_ref()
                .map(|s| s.iter().map(Covering::to_vecs).collect()),
            nodes: r.nodes_explored,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub n: usize,
    pub forbidden: usize,
    pub required: usize,
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    pub normalized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub forbidden: Vec<usize>,
    pub required: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub k: usize,
    pub num_roots: usize,
    /// Fragments of each root, in color order.
    pub coverings: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attrset::AttrSet;

    #[test]
    fn covering_report_field_order() {
        let c = Covering::new(vec![AttrSet::from([0, 1]), AttrSet::from([2])]);
        let r = CoveringReport::new(&c, CoverMethod::Heuristic, None);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"fragments":[[0,1],[2]],"size":2,"method":"heuristic"}"#
        );
        let back: CoveringReport =
            serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
