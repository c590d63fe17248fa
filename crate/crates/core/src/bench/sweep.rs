//! Parameter sweeps producing one CSV row per (instance, t, seed).
//!
//! Trials run in parallel on the current rayon pool and are collected in
//! configuration order, so the CSV is byte-identical across runs.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::algorithms::Algorithm;
use crate::bench::config::ExperimentConfig;
use crate::bench::{run_algorithm, RunSpec, ALGORITHM_STREAM, FUNCTION_STREAM, GRAPH_STREAM};
use crate::bounds::{det_upper, lower_bound_value};
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::rng::derive_seed;

pub const HEADER: [&str; 13] = [
    "family", "n", "t", "s", "delta", "algo", "seed", "queries", "rounds", "success", "det_upper", "rand_lower",
    "verified",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub n: usize,
    pub t: usize,
    pub s: usize,
    pub delta: usize,
    pub algo: Algorithm,
    pub seed: u64,
    pub queries: usize,
    pub rounds: usize,
    /// The algorithm reported a vertex rather than failure.
    pub success: bool,
    pub det_upper: f64,
    pub rand_lower: f64,
    /// The reported vertex is a local minimum of the full function.
    pub verified: bool,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    /// Human-readable invariant violations; empty on a clean sweep.
    pub violations: Vec<String>,
}

/// Success probability assumed for the lower-bound column.
pub fn assumed_success(algo: Algorithm) -> f64 {
    if algo.is_deterministic() {
        1.0
    } else {
        0.9
    }
}

pub fn run_sweep(cfg: &ExperimentConfig) -> Result<SweepOutcome> {
    cfg.validate()?;
    let families = cfg.families()?;
    let function = cfg.function_spec()?;
    let trials: Vec<(&Family, usize, u64)> = families
        .iter()
        .flat_map(|fam| {
            cfg.t
                .iter()
                .flat_map(move |&t| (0..cfg.seeds).map(move |i| (fam, t, cfg.master_seed.wrapping_add(i))))
        })
        .collect();

    let results: Vec<(SweepRow, Vec<String>)> = trials
        .par_iter()
        .map(|&(family, t, seed)| -> Result<(SweepRow, Vec<String>)> {
            let g = family.generate(derive_seed(seed, GRAPH_STREAM))?;
            let f = function.build(&g, derive_seed(seed, FUNCTION_STREAM))?;
            let n = g.n();
            let known_s = family.known_separation_number();
            let s = cfg.s.or(known_s).unwrap_or(n);
            let spec = RunSpec { algo: cfg.algo, t, s, mode: cfg.mode, seed: derive_seed(seed, ALGORITHM_STREAM) };
            let mut out = run_algorithm(&g, &f, &spec)?;
            let verified = out.result.audit(&g, &f);
            let row = SweepRow {
                family: family.to_string(),
                n,
                t,
                s,
                delta: g.max_degree(),
                algo: cfg.algo,
                seed,
                queries: out.result.total_queries(),
                rounds: out.result.rounds_used,
                success: out.result.output.is_some(),
                det_upper: det_upper(n, t, s, g.max_degree()),
                rand_lower: lower_bound_value(n, t, assumed_success(cfg.algo)),
                verified,
            };
            let mut problems = Vec::new();
            let tag = format!("{} t={t} seed={seed}", row.family);
            if row.success && !verified {
                problems.push(format!("{tag}: output is not a local minimum"));
            }
            if row.rounds > t || !out.result.transcript.is_consistent() {
                problems.push(format!("{tag}: transcript audit failed"));
            }
            if !out.audit.is_clean() {
                problems.push(format!("{tag}: {} non-exploration violations", out.audit.violations.len()));
            }
            let s_is_known = known_s.is_some_and(|k| s >= k);
            if cfg.algo == Algorithm::Sept && s_is_known && row.queries as f64 > row.det_upper {
                problems.push(format!("{tag}: {} queries exceed the bound {:.3}", row.queries, row.det_upper));
            }
            Ok((row, problems))
        })
        .collect::<Result<_>>()?;

    let mut outcome = SweepOutcome::default();
    for (row, problems) in results {
        outcome.rows.push(row);
        outcome.violations.extend(problems);
    }
    Ok(outcome)
}

/// Writes the header and rows as RFC 4180 CSV with LF line endings.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(HEADER).map_err(io)?;
    for row in rows {
        w.serialize(row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}
