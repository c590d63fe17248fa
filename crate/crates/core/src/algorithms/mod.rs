//! Round-limited local-minimum search procedures.
//!
//! Every procedure consumes a [`RoundOracle`] and returns a [`SearchResult`]
//! holding its output and the full query transcript.

mod cover2;
mod descent;
mod sep2;
mod sept;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{RoundOracle, Transcript, Value, ValueFunction};

pub use cover2::vertex_cover_two_round;
pub use descent::{
    choose_descent_params, parallel_warm_start, steepest_descent, BallQueries, DescentParams, DescentPath,
};
pub use sep2::separator_two_round;
pub use sept::{
    run_on_hierarchy, separator_t_round, separator_t_round_with_audit, NonExplorationAudit, Violation,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    /// The reported vertex, or `None` for an explicit failure.
    pub output: Option<usize>,
    pub transcript: Transcript,
    pub rounds_used: usize,
    /// Set by [`SearchResult::audit`].
    pub verified: bool,
}

impl SearchResult {
    fn finish(output: Option<usize>, oracle: RoundOracle<'_>) -> Self {
        let transcript = oracle.into_transcript();
        Self { output, rounds_used: transcript.rounds_used(), transcript, verified: false }
    }

    pub fn total_queries(&self) -> usize {
        self.transcript.total_queries
    }

    /// Brute-force check of the output against the full function; stores and
    /// returns the verdict. Failures never verify.
    pub fn audit(&mut self, g: &Graph, f: &ValueFunction) -> bool {
        self.verified = self.output.is_some_and(|v| f.is_local_minimum(g, v));
        self.verified
    }
}

/// Values learned so far plus the running ≺-minimum.
#[derive(Debug, Clone)]
pub(crate) struct Observed {
    known: Vec<Option<Value>>,
    best: Option<(usize, Value)>,
}

impl Observed {
    pub(crate) fn new(n: usize) -> Self {
        Self { known: vec![None; n], best: None }
    }

    /// Submits `batch` and records the answers.
    pub(crate) fn query(&mut self, oracle: &mut RoundOracle<'_>, batch: &[usize]) -> Result<()> {
        let answers = oracle.submit_batch(batch)?;
        for (&v, a) in batch.iter().zip(answers) {
            self.known[v] = Some(a);
            if self.best.is_none_or(|(b, bv)| (a, v) < (bv, b)) {
                self.best = Some((v, a));
            }
        }
        Ok(())
    }

    pub(crate) fn best(&self) -> Option<usize> {
        self.best.map(|(v, _)| v)
    }

    pub(crate) fn get(&self, v: usize) -> Option<Value> {
        self.known[v]
    }

    pub(crate) fn known(&self) -> &[Option<Value>] {
        &self.known
    }

    /// `u ≺ v` for two observed vertices.
    pub(crate) fn less(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.known[u].expect("observed"), self.known[v].expect("observed"));
        (a, u) < (b, v)
    }
}

pub(crate) fn require_rounds(oracle: &RoundOracle<'_>, needed: usize) -> Result<()> {
    if oracle.rounds_left() < needed {
        return Err(Error::RoundBudgetExceeded { budget: oracle.round_budget() });
    }
    Ok(())
}

/// Algorithm selector shared by the CLI and the experiment harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Cover2,
    Sep2,
    Sept,
    Descent,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Self::Cover2, Self::Sep2, Self::Sept, Self::Descent];

    pub fn is_deterministic(self) -> bool {
        self != Self::Descent
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover2" => Ok(Self::Cover2),
            "sep2" => Ok(Self::Sep2),
            "sept" => Ok(Self::Sept),
            "descent" => Ok(Self::Descent),
            other => Err(Error::Parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cover2 => "cover2",
            Self::Sep2 => "sep2",
            Self::Sept => "sept",
            Self::Descent => "descent",
        })
    }
}
