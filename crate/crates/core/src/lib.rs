//! Fragmentation of an attribute set into coverings that keep every
//! forbidden combination apart and every required combination together.
//!
//! The crate offers the instance model and bounds ([`instance`], [`bounds`]),
//! the greedy and degree-sorted constructions ([`greedy`]), an exact
//! partition search ([`exact`]), the Boolean-ideal formulation with root
//! enumeration and Buchberger completion ([`algebra`]), and the random
//! instance generator and benchmark harness ([`experiments`]).

pub mod algebra;
pub mod attrset;
pub mod bounds;
pub mod covering;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod greedy;
pub mod instance;
pub mod report;

pub use attrset::{AttrSet, SetFamily};
pub use bounds::{bounds, BoundsReport};
pub use covering::Covering;
pub use error::{Error, Result};
pub use exact::{
    decide_cover_exists, enumerate_optimal_covers, optimal_cover, Decision, OptimalReport,
    SolveLimits,
};
pub use greedy::{greedy_cover, heuristic_cover, verify_greedy_guarantee, GreedyTrace};
pub use instance::{
    degree, punctured_covering, validate, DegreeTarget, Instance, InstanceLoadError, RawInstance,
};
