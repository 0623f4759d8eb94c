use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cpu_time::ProcessTime;
use serde::Serialize;
use splitcover::algebra::{
    algebraic_optimal_size, encode_ideal, enumerate_roots, multicoloring_to_covering,
    AlgebraLimits, AlgebraicMethod,
};
use splitcover::experiments::{self, BenchOptions, GenParams, CSV_HEADER};
use splitcover::greedy::GreedyAction;
use splitcover::report::{
    CheckReport, CoverMethod, CoveringReport, ExactReport, RootsReport, Violation,
};
use splitcover::{
    bounds, enumerate_optimal_covers, greedy_cover, heuristic_cover, optimal_cover, Error,
    Instance, InstanceLoadError, SolveLimits,
};

#[derive(Parser)]
#[command(
    name = "splitcover",
    version,
    about = "Split attribute sets into privacy-safe fragments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an instance and report feasibility.
    Check(Common),
    /// Print lower and upper bounds on the optimal covering size.
    Bounds(Common),
    /// Greedy covering over A in input order.
    Greedy(CoverArgs),
    /// Greedy covering over A sorted by forbidden degree.
    Heuristic(CoverArgs),
    /// Optimal covering by partition search.
    Exact(ExactArgs),
    /// Smallest number of colors whose ideal has a common root.
    Algebraic(AlgebraicArgs),
    /// Common roots of the k-color ideal.
    Roots(RootsArgs),
    /// Print a random instance as JSON.
    Gen(GenArgs),
    /// Benchmark greedy against heuristic on random instances, as CSV.
    Bench(BenchArgs),
    /// Print a medical fixture instance as JSON.
    Medical(MedicalArgs),
}

#[derive(Args)]
struct Source {
    /// Instance JSON file.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generate a random instance on this many attributes instead.
    #[arg(long, conflicts_with = "input")]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    rho: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: Source,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Report CPU time of the solve on standard error.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct CoverArgs {
    #[command(flatten)]
    common: Common,
    /// Include the step-by-step trace.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    common: Common,
    /// Search-node budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Also list every optimal covering.
    #[arg(long)]
    enumerate: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Buchberger,
    Enumerate,
}

#[derive(Args)]
struct AlgebraicArgs {
    #[command(flatten)]
    common: Common,
    /// Largest variable count handled by root enumeration.
    #[arg(long)]
    max_vars: Option<usize>,
    /// Critical-pair and search-node budget.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    common: Common,
    /// Number of colors.
    #[arg(long)]
    k: usize,
    /// Print the generators before the roots.
    #[arg(long)]
    dump_ideal: bool,
    #[arg(long)]
    max_vars: Option<usize>,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    rho: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Attribute counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Densities, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    rho: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Master seed; trial t of every cell uses stream t.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Node budget of the exact solver per trial; without it the optimum
    /// is not computed.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Fill in the timing columns.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct MedicalArgs {
    #[arg(long)]
    row: usize,
}

enum Failure {
    Infeasible(String),
    Budget(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Infeasible(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Input(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InfeasibleInstance { .. } => Failure::Infeasible(e.to_string()),
            Error::BudgetExceeded | Error::VariableCapExceeded { .. } => {
                Failure::Budget(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(fail) => {
            let code = fail.code();
            match fail {
                // the verdict is the report itself
                Failure::Infeasible(msg) => println!("{msg}"),
                Failure::Budget(msg) | Failure::Input(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check(c) => check(&c),
        Command::Bounds(c) => {
            let inst = load(&c.source)?;
            let (report, secs) = timed(|| bounds(&inst));
            report_time(c.timings, secs);
            let b = report?;
            if c.json {
                return Ok(to_json(&b));
            }
            let mut out = String::new();
            let rows: [(&str, String); 10] = [
                ("lower", b.lower.to_string()),
                ("greedy_upper", b.greedy_upper.to_string()),
                ("heuristic_upper", b.heuristic_upper.to_string()),
                ("refined_upper", b.refined_upper.to_string()),
                (
                    "probabilistic_size",
                    format!("{:.3}", b.probabilistic_size_bound),
                ),
                (
                    "probabilistic_degree",
                    format!("{:.3}", b.probabilistic_degree_bound),
                ),
                ("k", b.k.to_string()),
                ("k_any", b.k_any.to_string()),
                ("deg_forbidden", b.deg_forbidden.to_string()),
                ("deg_required", b.deg_required.to_string()),
            ];
            for (key, value) in rows {
                writeln!(out, "{key:<22}{value}").unwrap();
            }
            Ok(out)
        }
        Command::Greedy(c) => cover(&c, CoverMethod::Greedy),
        Command::Heuristic(c) => cover(&c, CoverMethod::Heuristic),
        Command::Exact(c) => exact(&c),
        Command::Algebraic(c) => algebraic(&c),
        Command::Roots(c) => roots(&c),
        Command::Gen(g) => {
            let inst = experiments::gen_random_instance(GenParams {
                n: g.n,
                rho: g.rho,
                seed: g.seed,
            })?;
            Ok(inst.to_json() + "\n")
        }
        Command::Bench(b) => bench(&b),
        Command::Medical(m) => Ok(experiments::medical_instance(m.row)?.to_json() + "\n"),
    }
}

fn load(source: &Source) -> Result<Instance, Failure> {
    match (&source.input, source.n) {
        (Some(path), _) => load_file(path),
        (None, Some(n)) => Ok(experiments::gen_random_instance(GenParams {
            n,
            rho: source.rho,
            seed: source.seed,
        })?),
        (None, None) => Err(Failure::Input("give an instance with --in or --n".into())),
    }
}

fn load_file(path: &Path) -> Result<Instance, Failure> {
    let shown = path.display();
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{shown}: {e}")))?;
    Instance::from_json(&text).map_err(|e| match e {
        InstanceLoadError::Json(e) => {
            Failure::Input(format!("{shown}:{}:{}: {e}", e.line(), e.column()))
        }
        InstanceLoadError::Invalid(e) => Failure::Input(format!("{shown}: {e}")),
    })
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = ProcessTime::now();
    let value = f();
    (value, start.elapsed().as_secs_f64())
}

fn report_time(enabled: bool, secs: f64) {
    if enabled {
        eprintln!("cpu_seconds: {secs:.6}");
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn check(c: &Common) -> Outcome {
    let inst = load(&c.source)?;
    let violation = inst.feasibility_violation();
    let report = CheckReport {
        n: inst.n(),
        forbidden: inst.forbidden().len(),
        required: inst.required().len(),
        feasible: violation.is_none(),
        violation: violation.map(|(f, b)| Violation {
            forbidden: f.to_vec(),
            required: b.to_vec(),
        }),
        normalized: inst.is_normalized(),
    };
    let out = if c.json {
        to_json(&report)
    } else {
        let mut out = format!(
            "n = {}, |F| = {}, |A| = {}, normalized: {}\n",
            report.n, report.forbidden, report.required, report.normalized
        );
        match violation {
            None => out.push_str("feasible\n"),
            Some((forbidden, required)) => {
                out.push_str(
                    &Error::InfeasibleInstance {
                        forbidden,
                        required,
                    }
                    .to_string(),
                );
                out.push('\n');
            }
        }
        out
    };
    if report.feasible {
        Ok(out)
    } else {
        Err(Failure::Infeasible(out.trim_end().to_string()))
    }
}

fn cover(c: &CoverArgs, method: CoverMethod) -> Outcome {
    let inst = load(&c.common.source)?;
    let (result, secs) = timed(|| match method {
        CoverMethod::Greedy => greedy_cover(&inst),
        CoverMethod::Heuristic => heuristic_cover(&inst),
    });
    report_time(c.common.timings, secs);
    let (covering, trace) = result?;
    let report = CoveringReport::new(&covering, method, c.trace.then_some(trace));
    if c.common.json {
        return Ok(to_json(&report));
    }
    let mut out = format!("size {}\n", report.size);
    for x in covering.fragments() {
        writeln!(out, "  {x}").unwrap();
    }
    if let Some(trace) = &report.trace {
        out.push_str("trace\n");
        for step in &trace.steps {
            let b = inst.required().sets()[step.required_index];
            let what = match step.action {
                GreedyAction::MergedInto(j) => format!("merged into fragment {j}"),
                GreedyAction::AlreadyContained => "already contained".to_string(),
                GreedyAction::AppendedNew => "new fragment".to_string(),
            };
            writeln!(out, "  A[{}] = {b}: {what}", step.required_index).unwrap();
        }
    }
    Ok(out)
}

fn exact(c: &ExactArgs) -> Outcome {
    let inst = load(&c.common.source)?;
    let limits = c.budget.map(SolveLimits::with_nodes).unwrap_or_default();
    let (result, secs) = timed(|| {
        if c.enumerate {
            enumerate_optimal_covers(&inst, &limits)
        } else {
            optimal_cover(&inst, &limits)
        }
    });
    report_time(c.common.timings, secs);
    let report = ExactReport::from(&result?);
    if c.common.json {
        return Ok(to_json(&report));
    }
    let mut out = format!("optimal_size {}\n", report.optimal_size);
    writeln!(out, "cover {}", fmt_sets(&report.cover)).unwrap();
    writeln!(out, "nodes {}", report.nodes).unwrap();
    if let Some(all) = &report.canonical_optimal_covers {
        writeln!(out, "optimal covers {}", all.len()).unwrap();
        for c in all {
            writeln!(out, "  {}", fmt_sets(c)).unwrap();
        }
    }
    Ok(out)
}

fn algebra_limits(max_vars: Option<usize>, budget: Option<u64>) -> AlgebraLimits {
    let mut limits = AlgebraLimits::default();
    if let Some(v) = max_vars {
        limits.var_cap = v;
    }
    if let Some(b) = budget {
        limits.max_nodes = b;
        limits.max_pairs = b;
    }
    limits
}

fn algebraic(c: &AlgebraicArgs) -> Outcome {
    let inst = load(&c.common.source)?;
    let limits = algebra_limits(c.max_vars, c.budget);
    let method = match c.method {
        MethodArg::Auto => AlgebraicMethod::Auto,
        MethodArg::Buchberger => AlgebraicMethod::Buchberger,
        MethodArg::Enumerate => AlgebraicMethod::RootEnumeration,
    };
    let (result, secs) = timed(|| algebraic_optimal_size(&inst, &limits, method));
    report_time(c.common.timings, secs);
    let report = result?;
    if c.common.json {
        return Ok(to_json(&report));
    }
    let name = match report.method {
        AlgebraicMethod::Buchberger => "buchberger",
        AlgebraicMethod::RootEnumeration => "root_enumeration",
        AlgebraicMethod::Auto => "auto",
    };
    Ok(format!("k = {}\nmethod {name}\n", report.k))
}

fn roots(c: &RootsArgs) -> Outcome {
    let inst = load(&c.common.source)?;
    if let Some((forbidden, required)) = inst.feasibility_violation() {
        return Err(Error::InfeasibleInstance {
            forbidden,
            required,
        }
        .into());
    }
    let gens = encode_ideal(&inst, c.k)?;
    let limits = algebra_limits(c.max_vars, c.budget);
    let (result, secs) = timed(|| enumerate_roots(&gens, &limits));
    report_time(c.common.timings, secs);
    let roots = result?;
    let report = RootsReport {
        k: c.k,
        num_roots: roots.len(),
        coverings: roots
            .iter()
            .map(|r| multicoloring_to_covering(&r.to_multicoloring()).to_vecs())
            .collect(),
        generators: c
            .dump_ideal
            .then(|| gens.dump().lines().map(str::to_string).collect()),
    };
    if c.common.json {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    if let Some(lines) = &report.generators {
        writeln!(out, "generators {}", lines.len()).unwrap();
        for line in lines {
            writeln!(out, "  {line}").unwrap();
        }
    }
    writeln!(out, "roots {}", report.num_roots).unwrap();
    for cov in &report.coverings {
        writeln!(out, "  {}", fmt_sets(cov)).unwrap();
    }
    Ok(out)
}

fn bench(b: &BenchArgs) -> Outcome {
    let options = BenchOptions {
        trials: b.trials,
        exact_budget: b.budget,
        jobs: b.jobs,
    };
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for &n in &b.n {
        for &rho in &b.rho {
            let row = experiments::bench(
                GenParams {
                    n,
                    rho,
                    seed: b.seed,
                },
                &options,
            )?;
            out.push_str(&row.to_csv(b.timings));
            out.push('\n');
        }
    }
    Ok(out)
}

fn fmt_sets(sets: &[Vec<usize>]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|s| {
            let items: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}
