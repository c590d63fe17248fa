//! Staircase adversary: signatures, candidate sets and exhaustive evaluation
//! of deterministic algorithms against the uniform staircase distribution.
//!
//! For a rooted spanning tree `T` and target `z`, the staircase function is
//! `−depth(x)` on ancestors of `z` and `+depth(x)` elsewhere, so a query at
//! `x` reveals whether `x` is an ancestor of the hidden target. After a
//! history `H`, the targets consistent with it form the subtree of the
//! deepest negatively answered vertex `r_H` with the subtrees of all
//! positively answered vertices removed.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::algorithms::SearchResult;
use crate::error::{Error, Result};
use crate::oracle::{Transcript, ValueFunction};
use crate::tree::SpanningTree;

/// `Q ∩ Anc_T(u)`, sorted by id.
pub fn signature(tree: &SpanningTree, q: &[usize], u: usize) -> Vec<usize> {
    let mut sig: Vec<usize> = q.iter().copied().filter(|&x| tree.is_ancestor(x, u)).collect();
    sig.sort_unstable();
    sig.dedup();
    sig
}

/// Number of distinct signatures of the vertices in `u_set`.
pub fn count_signatures(tree: &SpanningTree, q: &[usize], u_set: &[usize]) -> usize {
    let mut sigs: Vec<Vec<usize>> = u_set.iter().map(|&u| signature(tree, q, u)).collect();
    sigs.sort_unstable();
    sigs.dedup();
    sigs.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    fn of(x: i8) -> Self {
        match x {
            i8::MIN..=-1 => Self::Neg,
            0 => Self::Zero,
            _ => Self::Pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignRound {
    pub batch: Vec<usize>,
    pub signs: Vec<Sign>,
}

/// The sign projection of a query history.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SignHistory {
    pub rounds: Vec<SignRound>,
    pub q_minus: Vec<usize>,
    pub q_plus: Vec<usize>,
    /// Vertices answered with zero (only the root under a staircase).
    pub q_zero: Vec<usize>,
}

impl SignHistory {
    pub fn from_transcript(transcript: &Transcript) -> Self {
        let mut h = Self::default();
        for record in &transcript.rounds {
            let signs = record.answers.iter().map(|a| Sign::of(a.signum())).collect();
            h.push_round(record.batch.clone(), signs);
        }
        h
    }

    pub fn push_round(&mut self, batch: Vec<usize>, signs: Vec<Sign>) {
        for (&v, &s) in batch.iter().zip(&signs) {
            let set = match s {
                Sign::Neg => &mut self.q_minus,
                Sign::Zero => &mut self.q_zero,
                Sign::Pos => &mut self.q_plus,
            };
            if let Err(pos) = set.binary_search(&v) {
                set.insert(pos, v);
            }
        }
        self.rounds.push(SignRound { batch, signs });
    }

    /// The history restricted to its first `k` rounds.
    pub fn prefix(&self, k: usize) -> Self {
        let mut h = Self::default();
        for r in self.rounds.iter().take(k) {
            h.push_round(r.batch.clone(), r.signs.clone());
        }
        h
    }

    pub fn queried(&self) -> impl Iterator<Item = usize> + '_ {
        self.q_minus.iter().chain(&self.q_zero).chain(&self.q_plus).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateSet {
    pub r_h: usize,
    /// Sorted by id.
    pub members: Vec<usize>,
}

/// Targets whose staircase function reproduces `h`.
pub fn candidate_set(tree: &SpanningTree, h: &SignHistory) -> Result<CandidateSet> {
    let root = tree.root();
    if h.q_zero.iter().any(|&v| v != root) || h.q_plus.contains(&root) || h.q_minus.contains(&root) {
        return Err(Error::InconsistentHistory);
    }
    let mut chain = h.q_minus.clone();
    chain.sort_by_key(|&v| tree.depth(v));
    let mut r_h = root;
    for &v in &chain {
        if !tree.is_ancestor(r_h, v) || v == r_h {
            return Err(Error::InconsistentHistory);
        }
        r_h = v;
    }
    if h.q_plus.iter().any(|&x| tree.is_ancestor(x, r_h)) {
        return Err(Error::InconsistentHistory);
    }
    let mut blocked = vec![false; tree.n()];
    for &x in &h.q_plus {
        blocked[x] = true;
    }
    let mut members = Vec::new();
    let mut stack = vec![r_h];
    while let Some(u) = stack.pop() {
        members.push(u);
        stack.extend(tree.children(u).iter().copied().filter(|&c| !blocked[c]));
    }
    members.sort_unstable();
    Ok(CandidateSet { r_h, members })
}

/// Targets whose staircase answers agree with `h`, by simulating every `f_v`.
pub fn brute_force_candidates(tree: &SpanningTree, h: &SignHistory) -> Vec<usize> {
    (0..tree.n())
        .filter(|&v| {
            h.rounds.iter().all(|r| {
                r.batch.iter().zip(&r.signs).all(|(&x, &s)| {
                    let expected = if x == tree.root() {
                        Sign::Zero
                    } else if tree.is_ancestor(x, v) {
                        Sign::Neg
                    } else {
                        Sign::Pos
                    };
                    expected == s
                })
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetOutcome {
    pub target: usize,
    pub output: Option<usize>,
    pub queries: usize,
    pub rounds: usize,
}

/// Candidate sets at the end of one round, one per distinct history prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundPartition {
    pub round: usize,
    pub sets: Vec<CandidateSet>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub rounds: Vec<RoundPartition>,
    pub violations: Vec<String>,
}

impl PartitionReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub n: usize,
    pub success_prob: Ratio<u64>,
    pub expected_queries: Ratio<u64>,
    pub outcomes: Vec<TargetOutcome>,
    pub partition: PartitionReport,
}

fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl Evaluation {
    pub fn success_prob_f64(&self) -> f64 {
        ratio_f64(self.success_prob)
    }

    pub fn expected_queries_f64(&self) -> f64 {
        ratio_f64(self.expected_queries)
    }
}

/// Runs `algo` on every staircase function `f_v` of `tree` and checks that
/// the end-of-round candidate sets partition the vertex set. `algo` must be
/// deterministic and use at most `t` rounds.
pub fn evaluate_deterministic<F>(tree: &SpanningTree, t: usize, algo: F) -> Result<Evaluation>
where
    F: Fn(&ValueFunction) -> Result<SearchResult> + Sync,
{
    let n = tree.n();
    let runs: Vec<(TargetOutcome, SignHistory)> = (0..n)
        .into_par_iter()
        .map(|v| {
            let f = ValueFunction::staircase(tree, v)?;
            let res = algo(&f)?;
            if res.rounds_used > t {
                return Err(Error::RoundBudgetExceeded { budget: t });
            }
            let outcome =
                TargetOutcome { target: v, output: res.output, queries: res.total_queries(), rounds: res.rounds_used };
            Ok((outcome, SignHistory::from_transcript(&res.transcript)))
        })
        .collect::<Result<_>>()?;

    let successes = runs.iter().filter(|(o, _)| o.output == Some(o.target)).count() as u64;
    let total: u64 = runs.iter().map(|(o, _)| o.queries as u64).sum();
    let partition = partition_report(tree, &runs);
    Ok(Evaluation {
        n,
        success_prob: Ratio::new(successes, n as u64),
        expected_queries: Ratio::new(total, n as u64),
        outcomes: runs.into_iter().map(|(o, _)| o).collect(),
        partition,
    })
}

fn partition_report(tree: &SpanningTree, runs: &[(TargetOutcome, SignHistory)]) -> PartitionReport {
    let n = tree.n();
    let max_rounds = runs.iter().map(|(_, h)| h.rounds.len()).max().unwrap_or(0);
    let mut report = PartitionReport::default();
    for round in 1..=max_rounds {
        let mut groups: BTreeMap<&[SignRound], Vec<usize>> = BTreeMap::new();
        for (o, h) in runs {
            let k = round.min(h.rounds.len());
            groups.entry(&h.rounds[..k]).or_default().push(o.target);
        }
        let mut owner = vec![usize::MAX; n];
        let mut sets = Vec::new();
        for (prefix, targets) in groups {
            let hist = prefix_history(prefix);
            match candidate_set(tree, &hist) {
                Err(e) => report.violations.push(format!("round {round}: {e} for targets {targets:?}")),
                Ok(cs) => {
                    if cs.members != targets {
                        report.violations.push(format!(
                            "round {round}: candidate set {:?} differs from simulated targets {targets:?}",
                            cs.members
                        ));
                    }
                    if let Some(msg) = structure_violation(tree, &hist, &cs) {
                        report.violations.push(format!("round {round}: {msg}"));
                    }
                    for &v in &cs.members {
                        if owner[v] != usize::MAX {
                            report.violations.push(format!("round {round}: vertex {v} in two candidate sets"));
                        }
                        owner[v] = sets.len();
                    }
                    sets.push(cs);
                }
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            report.violations.push(format!("round {round}: vertex {v} in no candidate set"));
        }
        report.rounds.push(RoundPartition { round, sets });
    }
    report
}

fn prefix_history(rounds: &[SignRound]) -> SignHistory {
    let mut h = SignHistory::default();
    for r in rounds {
        h.push_round(r.batch.clone(), r.signs.clone());
    }
    h
}

/// Checks that a candidate set is a connected subtree containing `r_H` and
/// that no queried vertex other than `r_H` lies inside it.
pub fn structure_violation(tree: &SpanningTree, h: &SignHistory, cs: &CandidateSet) -> Option<String> {
    if cs.members.binary_search(&cs.r_h).is_err() {
        return Some(format!("r_H {} missing from its candidate set", cs.r_h));
    }
    for &v in &cs.members {
        if v != cs.r_h && tree.parent(v).is_none_or(|p| cs.members.binary_search(&p).is_err()) {
            return Some(format!("candidate set not connected at {v}"));
        }
    }
    h.queried()
        .find(|&x| x != cs.r_h && cs.members.binary_search(&x).is_ok())
        .map(|x| format!("queried vertex {x} inside candidate set"))
}

/// Baseline that queries every vertex in one round.
pub fn query_everything(f: &ValueFunction, t: usize) -> Result<SearchResult> {
    use crate::oracle::RoundOracle;
    let mut oracle = RoundOracle::new(f, t);
    let all: Vec<usize> = (0..f.n()).collect();
    let answers = oracle.submit_batch(&all)?;
    let best = (0..f.n()).min_by(|&a, &b| answers[a].cmp(&answers[b]).then(a.cmp(&b)));
    let transcript = oracle.into_transcript();
    Ok(SearchResult { output: best, rounds_used: transcript.rounds_used(), transcript, verified: false })
}

/// Baseline that names `guess` without querying anything.
pub fn guess_without_queries(guess: usize) -> SearchResult {
    SearchResult { output: Some(guess), transcript: Transcript::default(), rounds_used: 0, verified: false }
}
