//! Benchmark harness comparing the greedy and heuristic coverings on
//! random instances, optionally against the exact optimum.

use cpu_time::ThreadTime;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{optimal_cover, SolveLimits};
use crate::experiments::gen::{gen_with_rng, trial_rng, GenParams};
use crate::greedy::{greedy_cover, heuristic_cover};

pub const CSV_HEADER: &str =
    "n,rho,trials,mean_t_greedy_s,mean_t_heur_s,mean_pct_reduction,mean_pct_over_opt,exact_skipped";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchOptions {
    pub trials: u64,
    /// Node budget for the exact solver per trial; `None` skips it.
    pub exact_budget: Option<u64>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

/// Outcome of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub size_greedy: usize,
    pub size_heuristic: usize,
    /// `None` when the exact solver was skipped or ran out of budget.
    pub optimal: Option<usize>,
    pub t_greedy: f64,
    pub t_heuristic: f64,
}

impl TrialResult {
    pub fn pct_reduction(&self) -> f64 {
        100.0 * (self.size_greedy as f64 - self.size_heuristic as f64) / self.size_greedy as f64
    }

    pub fn pct_over_optimal(&self) -> Option<f64> {
        self.optimal
            .map(|opt| 100.0 * (self.size_heuristic as f64 - opt as f64) / opt as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub rho: f64,
    pub trials: u64,
    pub mean_time_greedy: f64,
    pub mean_time_heuristic: f64,
    pub mean_pct_reduction: f64,
    /// Mean over the trials whose exact solve finished.
    pub mean_pct_over_optimal: Option<f64>,
    /// Trials without an optimal size (budget exceeded or exact disabled).
    pub exact_skipped: u64,
}

impl BenchRow {
    /// One CSV line; the time columns stay empty unless `with_times`.
    pub fn to_csv(&self, with_times: bool) -> String {
        let time = |t: f64| {
            if with_times {
                format!("{t:.6e}")
            } else {
                String::new()
            }
        };
        let over = self
            .mean_pct_over_optimal
            .map(|v| format!("{v:.6}"))
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{:.6},{},{}",
            self.n,
            self.rho,
            self.trials,
            time(self.mean_time_greedy),
            time(self.mean_time_heuristic),
            self.mean_pct_reduction,
            over,
            self.exact_skipped
        )
    }
}

/// Runs trial `trial` of the cell `params`, drawing the instance from the
/// stream `(params.seed, trial)`. Only the solver calls are timed.
pub fn run_trial(params: GenParams, trial: u64, exact_budget: Option<u64>) -> Result<TrialResult> {
    let inst = gen_with_rng(params.n, params.rho, &mut trial_rng(params.seed, trial))?;

    let start = ThreadTime::now();
    let (greedy, _) = greedy_cover(&inst)?;
    let t_greedy = start.elapsed().as_secs_f64();

    let start = ThreadTime::now();
    let (heur, _) = heuristic_cover(&inst)?;
    let t_heuristic = start.elapsed().as_secs_f64();

    let optimal = match exact_budget {
        None => None,
        Some(nodes) => match optimal_cover(&inst, &SolveLimits::with_nodes(nodes)) {
            Ok(r) => Some(r.optimal_size),
            Err(Error::BudgetExceeded) => None,
            Err(e) => return Err(e),
        },
    };
    Ok(TrialResult {
        size_greedy: greedy.len(),
        size_heuristic: heur.len(),
        optimal,
        t_greedy,
        t_heuristic,
    })
}

/// Runs every trial of one cell and averages. Trials are independent, so
/// they run on `options.jobs` threads; results are summed in trial order,
/// which keeps the size statistics identical for any thread count.
pub fn bench(params: GenParams, options: &BenchOptions) -> Result<BenchRow> {
    if options.trials == 0 {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let results: Vec<TrialResult> = pool.install(|| {
        (0..options.trials)
            .into_par_iter()
            .map(|t| run_trial(params, t, options.exact_budget))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(aggregate(params, &results))
}

pub fn aggregate(params: GenParams, results: &[TrialResult]) -> BenchRow {
    let trials = results.len() as f64;
    let mean = |f: &dyn Fn(&TrialResult) -> f64| results.iter().map(f).sum::<f64>() / trials;
    let over: Vec<f64> = results
        .iter()
        .filter_map(TrialResult::pct_over_optimal)
        .collect();
    BenchRow {
        n: params.n,
        rho: params.rho,
        trials: results.len() as u64,
        mean_time_greedy: mean(&|r| r.t_greedy),
        mean_time_heuristic: mean(&|r| r.t_heuristic),
        mean_pct_reduction: mean(&|r| r.pct_reduction()),
        mean_pct_over_optimal: (!over.is_empty())
            .then(|| over.iter().sum::<f64>() / over.len() as f64),
        exact_skipped: (results.len() - over.len()) as u64,
    }
}
