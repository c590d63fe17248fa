//! `lsr`: command-line harness for round-limited local-minimum search.
//!
//! Exit codes: 0 on success, 1 when an invariant check fails, 2 on usage,
//! parse or I/O errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use lsr_core::adversary::{evaluate_deterministic, guess_without_queries, query_everything, Evaluation};
use lsr_core::algorithms::{Algorithm, SearchResult};
use lsr_core::bench::config::ExperimentConfig;
use lsr_core::bench::report::cmd_bounds;
use lsr_core::bench::sweep::{run_sweep, write_csv};
use lsr_core::bench::{run_algorithm, FunctionSpec, RunSpec, ALGORITHM_STREAM, FUNCTION_STREAM, GRAPH_STREAM};
use lsr_core::bounds::{lower_bound_value, optimal_k, schedule_applies};
use lsr_core::generators::Family;
use lsr_core::hierarchy::SeparatorHierarchy;
use lsr_core::rng::derive_seed;
use lsr_core::{Graph, SeparatorMode, SpanningTree, ValueFunction};

#[derive(Parser)]
#[command(name = "lsr", version, about = "Round-limited local-minimum search on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it in the text format.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long, env = "LSR_SEED", default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when absent).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run one algorithm on one instance and print a JSON summary.
    Run(RunArgs),
    /// Run a configured parameter sweep and write CSV.
    Sweep(SweepArgs),
    /// Evaluate an algorithm against every staircase function of a tree.
    Adversary(AdversaryArgs),
    /// Print closed-form bounds as JSON.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long)]
        delta: usize,
        /// Success probability for the lower bound.
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
    /// Check whether a vertex is a local minimum; prints true or false.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// One value per line, vertex order.
        #[arg(long)]
        values: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
}

#[derive(Args)]
struct Instance {
    /// Graph file in the text format.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    graph: Option<PathBuf>,
    /// Family spec such as `cycle:101` or `random-regular:1024:3`.
    #[arg(long)]
    family: Option<Family>,
}

impl Instance {
    fn load(&self, seed: u64) -> Result<(Graph, Option<Family>)> {
        match (&self.graph, &self.family) {
            (Some(path), _) => Ok((read_graph(path)?, None)),
            (None, Some(fam)) => Ok((fam.generate(derive_seed(seed, GRAPH_STREAM))?, Some(fam.clone()))),
            (None, None) => bail!("either --graph or --family is required"),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long)]
    algo: Algorithm,
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Separation number; defaults to the family's known value, else n.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, env = "LSR_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "heuristic")]
    mode: SeparatorMode,
    /// `random`, `staircase` or `staircase:V`.
    #[arg(long, default_value = "random", conflicts_with = "values")]
    function: FunctionSpec,
    /// Function values file, one value per line.
    #[arg(long)]
    values: Option<PathBuf>,
    /// Write the query transcript as JSON.
    #[arg(long)]
    transcript: Option<PathBuf>,
    /// Write the separator hierarchy as JSON (sept only).
    #[arg(long)]
    dump_hierarchy: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML config; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    t: Option<Vec<usize>>,
    #[arg(long)]
    algo: Option<Algorithm>,
    #[arg(long)]
    seeds: Option<u64>,
    #[arg(long, env = "LSR_SEED")]
    master_seed: Option<u64>,
    #[arg(long)]
    mode: Option<SeparatorMode>,
    #[arg(long)]
    function: Option<String>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads (all cores when absent).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum AdversaryAlgo {
    Cover2,
    Sep2,
    Sept,
    Descent,
    QueryAll,
    GuessRoot,
}

#[derive(Args)]
struct AdversaryArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, default_value_t = 0)]
    root: usize,
    #[arg(long, value_enum)]
    algo: AdversaryAlgo,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value = "exact")]
    mode: SeparatorMode,
    #[arg(long, env = "LSR_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of sampling seeds for the randomized algorithm.
    #[arg(long, default_value_t = 20)]
    seeds: u64,
    /// Write the per-round candidate-set partitions as JSON.
    #[arg(long)]
    partitions: Option<PathBuf>,
}

/// Failure of an invariant check, reported with exit code 1.
#[derive(Debug)]
struct InvariantViolation(String);

impl std::fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InvariantViolation {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<InvariantViolation>() => {
            eprintln!("invariant violation: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Gen { family, seed, output } => {
            let g = family.generate(derive_seed(seed, GRAPH_STREAM))?;
            emit(output.as_deref(), &g.to_text())
        }
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Adversary(args) => cmd_adversary(args),
        Command::Bounds { n, t, s, delta, c } => {
            if n == 0 || t == 0 || !(0.0..=1.0).contains(&c) {
                bail!("bounds need n ≥ 1, t ≥ 1 and c in [0, 1]");
            }
            emit(None, &pretty(&cmd_bounds(n, t, s, delta, c))?)
        }
        Command::Verify { graph, values, vertex } => {
            let g = read_graph(&graph)?;
            let f = read_values(&values, g.n())?;
            g.check_vertex(vertex)?;
            let ok = f.is_local_minimum(&g, vertex);
            println!("{ok}");
            if ok {
                Ok(())
            } else {
                Err(InvariantViolation(format!("vertex {vertex} is not a local minimum")).into())
            }
        }
    }
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let (g, family) = args.instance.load(args.seed)?;
    let f = match &args.values {
        Some(path) => read_values(path, g.n())?,
        None => args.function.build(&g, derive_seed(args.seed, FUNCTION_STREAM))?,
    };
    let s = args.s.or(family.as_ref().and_then(Family::known_separation_number)).unwrap_or(g.n());
    let spec = RunSpec { algo: args.algo, t: args.t, s, mode: args.mode, seed: derive_seed(args.seed, ALGORITHM_STREAM) };

    if let Some(path) = &args.dump_hierarchy {
        if args.algo != Algorithm::Sept {
            bail!("--dump-hierarchy applies to --algo sept only");
        }
        let delta = g.max_degree();
        let text = if args.t >= 2 && schedule_applies(g.n(), s, delta) {
            SeparatorHierarchy::build(&g, &optimal_k(g.n(), s, delta, args.t), args.mode)?.to_json()
        } else {
            eprintln!("note: 3sΔ ≥ n, the search queries every vertex and builds no hierarchy");
            "null".to_string()
        };
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }

    let mut out = run_algorithm(&g, &f, &spec)?;
    let verified = out.result.audit(&g, &f);
    if let Some(path) = &args.transcript {
        fs::write(path, out.result.transcript.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    let summary = json!({
        "algo": args.algo,
        "n": g.n(),
        "t": args.t,
        "s": s,
        "delta": g.max_degree(),
        "output": out.result.output,
        "queries": out.result.total_queries(),
        "rounds": out.result.rounds_used,
        "verified": verified,
        "non_exploration_violations": out.audit.violations.len(),
    });
    emit(None, &pretty(&summary)?)?;
    if out.result.output.is_some() && !verified {
        return Err(InvariantViolation("output is not a local minimum".into()).into());
    }
    if !out.audit.is_clean() {
        return Err(InvariantViolation("non-exploration audit failed".into()).into());
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::from_toml(
            &fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        )?,
        None => ExperimentConfig::default(),
    };
    if let Some(v) = args.family {
        cfg.family = v;
    }
    if let Some(v) = args.sizes {
        cfg.sizes = v;
    }
    if let Some(v) = args.t {
        cfg.t = v;
    }
    if let Some(v) = args.algo {
        cfg.algo = v;
    }
    if let Some(v) = args.seeds {
        cfg.seeds = v;
    }
    if let Some(v) = args.master_seed {
        cfg.master_seed = v;
    }
    if let Some(v) = args.mode {
        cfg.mode = v;
    }
    if let Some(v) = args.function {
        cfg.function = v;
    }
    if args.s.is_some() {
        cfg.s = args.s;
    }
    if args.output.is_some() {
        cfg.output = args.output;
    }
    cfg.validate()?;

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let outcome = pool.build()?.install(|| run_sweep(&cfg))?;
    let mut buf = Vec::new();
    write_csv(&outcome.rows, &mut buf)?;
    emit(cfg.output.as_deref(), std::str::from_utf8(&buf)?)?;
    if !outcome.violations.is_empty() {
        for v in &outcome.violations {
            eprintln!("{v}");
        }
        return Err(InvariantViolation(format!("{} sweep rows violate invariants", outcome.violations.len())).into());
    }
    Ok(())
}

#[derive(Serialize)]
struct AdversaryReport {
    n: usize,
    t: usize,
    success_prob: f64,
    expected_queries: f64,
    lower_bound: f64,
    margin: f64,
    /// Binomial standard error of `success_prob`, for the randomized algorithm.
    success_stderr: Option<f64>,
    partition_violations: usize,
}

fn cmd_adversary(args: AdversaryArgs) -> Result<()> {
    let (g, family) = args.instance.load(args.seed)?;
    let tree = SpanningTree::bfs(&g, args.root)?;
    let s = args.s.or(family.as_ref().and_then(Family::known_separation_number)).unwrap_or(g.n());
    let t = args.t;
    let spec = |algo, seed| RunSpec { algo, t, s, mode: args.mode, seed };
    let evaluate = |algo: Algorithm, seed: u64| -> Result<Evaluation> {
        Ok(evaluate_deterministic(&tree, t, |f| run_algorithm(&g, f, &spec(algo, seed)).map(|o| o.result))?)
    };
    let (evals, stderr) = match args.algo {
        AdversaryAlgo::Cover2 => (vec![evaluate(Algorithm::Cover2, 0)?], None),
        AdversaryAlgo::Sep2 => (vec![evaluate(Algorithm::Sep2, 0)?], None),
        AdversaryAlgo::Sept => (vec![evaluate(Algorithm::Sept, 0)?], None),
        AdversaryAlgo::QueryAll => (vec![evaluate_deterministic(&tree, t, |f: &ValueFunction| query_everything(f, t))?], None),
        AdversaryAlgo::GuessRoot => {
            let root = tree.root();
            let guess = |_: &ValueFunction| -> lsr_core::Result<SearchResult> { Ok(guess_without_queries(root)) };
            (vec![evaluate_deterministic(&tree, t, guess)?], None)
        }
        AdversaryAlgo::Descent => {
            let evals = (0..args.seeds.max(1))
                .map(|i| evaluate(Algorithm::Descent, derive_seed(args.seed.wrapping_add(i), ALGORITHM_STREAM)))
                .collect::<Result<Vec<_>>>()?;
            let trials = (evals.len() * g.n()) as f64;
            let p = evals.iter().map(Evaluation::success_prob_f64).sum::<f64>() / evals.len() as f64;
            (evals, Some((p * (1.0 - p) / trials).sqrt()))
        }
    };
    let k = evals.len() as f64;
    let success_prob = evals.iter().map(Evaluation::success_prob_f64).sum::<f64>() / k;
    let expected_queries = evals.iter().map(Evaluation::expected_queries_f64).sum::<f64>() / k;
    let lower_bound = lower_bound_value(g.n(), t, success_prob);
    let partition_violations: usize = evals.iter().map(|e| e.partition.violations.len()).sum();
    if let Some(path) = &args.partitions {
        let dumps: Vec<_> = evals.iter().map(|e| &e.partition).collect();
        fs::write(path, pretty(&dumps)?).with_context(|| format!("writing {}", path.display()))?;
    }
    let report = AdversaryReport {
        n: g.n(),
        t,
        success_prob,
        expected_queries,
        lower_bound,
        margin: expected_queries - lower_bound,
        success_stderr: stderr,
        partition_violations,
    };
    emit(None, &pretty(&report)?)?;
    if partition_violations > 0 {
        return Err(InvariantViolation(format!("{partition_violations} candidate-set partition violations")).into());
    }
    if args.algo != AdversaryAlgo::Descent && report.margin < -1e-9 {
        return Err(InvariantViolation("expected queries fall below the lower bound".into()).into());
    }
    Ok(())
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_values(path: &Path, n: usize) -> Result<ValueFunction> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let f = ValueFunction::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    if f.n() != n {
        bail!("{} holds {} values for a graph with {n} vertices", path.display(), f.n());
    }
    Ok(f)
}

fn pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// Writes `text` to `path`, or to stdout when `path` is absent.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}
