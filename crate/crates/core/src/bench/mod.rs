//! Experiment harness behind the `lsr` binary: single runs, sweeps and
//! bound reports.

pub mod config;
pub mod report;
pub mod sweep;

use std::fmt;
use std::str::FromStr;

use crate::algorithms::{
    choose_descent_params, parallel_warm_start, separator_t_round_with_audit, separator_two_round,
    vertex_cover_two_round, Algorithm, BallQueries, NonExplorationAudit, SearchResult,
};
use crate::bounds::{optimal_k, schedule_applies};
use crate::cover::{matching_vertex_cover, min_vertex_cover, EXACT_COVER_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{RoundOracle, ValueFunction};
use crate::separator::SeparatorMode;
use crate::tree::SpanningTree;

/// Seed streams derived from a run seed.
pub const GRAPH_STREAM: u64 = 0;
pub const FUNCTION_STREAM: u64 = 1;
pub const ALGORITHM_STREAM: u64 = 2;

/// How the hidden function is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FunctionSpec {
    /// i.i.d. uniform values.
    #[default]
    Random,
    /// Staircase on the breadth-first tree rooted at 0; the target is the
    /// given vertex, or `seed mod n` when absent.
    Staircase(Option<usize>),
}

impl FunctionSpec {
    pub fn build(self, g: &Graph, seed: u64) -> Result<ValueFunction> {
        match self {
            Self::Random => Ok(ValueFunction::random(g.n(), seed)),
            Self::Staircase(target) => {
                let tree = SpanningTree::bfs(g, 0)?;
                let z = target.unwrap_or((seed % g.n() as u64) as usize);
                ValueFunction::staircase(&tree, z)
            }
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None if s == "random" => Ok(Self::Random),
            None if s == "staircase" => Ok(Self::Staircase(None)),
            Some(("staircase", v)) => v
                .parse()
                .map(|z| Self::Staircase(Some(z)))
                .map_err(|_| Error::Parse(format!("bad staircase target {v:?}"))),
            _ => Err(Error::Parse(format!("unknown function spec {s:?}"))),
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Random => f.write_str("random"),
            Self::Staircase(None) => f.write_str("staircase"),
            Self::Staircase(Some(z)) => write!(f, "staircase:{z}"),
        }
    }
}

/// Everything besides the graph and function that fixes one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSpec {
    pub algo: Algorithm,
    pub t: usize,
    /// Separation number supplied to the separator algorithms.
    pub s: usize,
    pub mode: SeparatorMode,
    /// Sampling seed for the randomized algorithm.
    pub seed: u64,
}

/// A finished run with its non-exploration audit (empty unless `sept`).
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub result: SearchResult,
    pub audit: NonExplorationAudit,
}

/// Runs one algorithm with an oracle allowing `spec.t` rounds.
///
/// `cover2` uses an exact minimum cover up to the exact-solver limit and a
/// matching-based cover above it. `sep2` uses the two-round threshold
/// `⌈√(3sn/Δ)⌉`, or `n` when that schedule does not apply.
pub fn run_algorithm(g: &Graph, f: &ValueFunction, spec: &RunSpec) -> Result<RunOutcome> {
    if f.n() != g.n() {
        return Err(Error::InvalidParameter(format!("function has {} values for {} vertices", f.n(), g.n())));
    }
    let oracle = RoundOracle::new(f, spec.t);
    let delta = g.max_degree();
    let plain = |result| Ok(RunOutcome { result, audit: NonExplorationAudit::default() });
    match spec.algo {
        Algorithm::Cover2 => {
            let cover = if g.n() <= EXACT_COVER_LIMIT { min_vertex_cover(g)? } else { matching_vertex_cover(g) };
            plain(vertex_cover_two_round(g, oracle, &cover)?)
        }
        Algorithm::Sep2 => {
            let k = if schedule_applies(g.n(), spec.s, delta) { optimal_k(g.n(), spec.s, delta, 2)[0] } else { g.n() };
            plain(separator_two_round(g, oracle, k, spec.mode)?)
        }
        Algorithm::Sept => {
            let (result, audit) = separator_t_round_with_audit(g, oracle, spec.t, spec.s, spec.mode)?;
            Ok(RunOutcome { result, audit })
        }
        Algorithm::Descent => {
            let params = choose_descent_params(g.n(), delta, spec.t)?;
            plain(parallel_warm_start(g, oracle, params, spec.seed, BallQueries::Requery)?)
        }
    }
}
