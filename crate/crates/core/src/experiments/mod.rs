//! Random instances, fixed fixtures and the benchmark harness.

pub mod bench;
pub mod fixtures;
pub mod gen;

pub use bench::{bench, run_trial, BenchOptions, BenchRow, TrialResult, CSV_HEADER};
pub use fixtures::{medical_instance, small_example_instance, MEDICAL_ATTRIBUTES, MEDICAL_ROWS};
pub use gen::{gen_random_instance, gen_with_rng, trial_rng, GenParams};
