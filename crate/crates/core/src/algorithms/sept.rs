//! t-round search over a separator hierarchy.
//!
//! Round 1 queries the top separator. Round `i` (`2 ≤ i ≤ t−1`) queries the
//! level-`i` separators of the level-`(i−1)` components that contain a
//! neighbor of the running minimum. Round `t` queries the whole final
//! components adjacent to the running minimum, and the output is the
//! ≺-minimum of everything queried.
//!
//! Before any vertex has been observed (an empty top separator) there is no
//! running minimum, and every component of the current level is treated as
//! adjacent.

use serde::Serialize;

use super::{require_rounds, Observed, SearchResult};
use crate::bounds::{optimal_k, schedule_applies};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hierarchy::SeparatorHierarchy;
use crate::oracle::RoundOracle;
use crate::separator::SeparatorMode;

/// A vertex of a skipped component that was queried anyway.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// 1-based round of the offending query.
    pub round: usize,
    pub component: usize,
    pub vertex: usize,
}

/// Outcome of checking that components not adjacent to the running minimum
/// are never queried afterwards.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct NonExplorationAudit {
    /// Number of (round, skipped component) pairs checked.
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl NonExplorationAudit {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the t-round separator search with the schedule `optimal_k(n, s, Δ, t)`.
/// When `3sΔ ≥ n` the schedule cannot beat exhaustive search, and all
/// vertices are queried in one round.
pub fn separator_t_round(
    g: &Graph,
    oracle: RoundOracle<'_>,
    t: usize,
    s: usize,
    mode: SeparatorMode,
) -> Result<SearchResult> {
    separator_t_round_with_audit(g, oracle, t, s, mode).map(|(res, _)| res)
}

pub fn separator_t_round_with_audit(
    g: &Graph,
    mut oracle: RoundOracle<'_>,
    t: usize,
    s: usize,
    mode: SeparatorMode,
) -> Result<(SearchResult, NonExplorationAudit)> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t-round search needs t ≥ 2, got {t}")));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("separation number must be positive".into()));
    }
    require_rounds(&oracle, t)?;
    let n = g.n();
    if !schedule_applies(n, s, g.max_degree()) {
        let mut seen = Observed::new(n);
        let all: Vec<usize> = (0..n).collect();
        seen.query(&mut oracle, &all)?;
        return Ok((SearchResult::finish(seen.best(), oracle), NonExplorationAudit::default()));
    }
    let k = optimal_k(n, s, g.max_degree(), t);
    let hierarchy = SeparatorHierarchy::build(g, &k, mode)?;
    run_on_hierarchy(g, oracle, &hierarchy)
}

/// Executes the round schedule on a prebuilt hierarchy, using `h.t` rounds.
pub fn run_on_hierarchy(
    g: &Graph,
    mut oracle: RoundOracle<'_>,
    h: &SeparatorHierarchy,
) -> Result<(SearchResult, NonExplorationAudit)> {
    let t = h.t;
    require_rounds(&oracle, t)?;
    let mut seen = Observed::new(g.n());
    // (first round the skipped components must stay untouched, their ids)
    let mut skipped: Vec<(usize, Vec<usize>)> = Vec::new();

    seen.query(&mut oracle, &h.top_separator)?;
    for round in 2..=t {
        let level = round - 1;
        let active = adjacent_components(g, h, level, seen.best());
        if seen.best().is_some() {
            let inactive: Vec<usize> = h.components_at(level).filter(|c| active.binary_search(c).is_err()).collect();
            skipped.push((round, inactive));
        }
        let batch: Vec<usize> = if round < t {
            active.iter().flat_map(|&c| h.component(c).separator.iter().copied()).collect()
        } else {
            active.iter().flat_map(|&c| h.component(c).vertices.iter().copied()).collect()
        };
        seen.query(&mut oracle, &batch)?;
    }

    let output = seen.best();
    let result = SearchResult::finish(output, oracle);
    let audit = audit_non_exploration(h, &result, &skipped);
    Ok((result, audit))
}

/// Sorted ids of the level-`level` components containing a neighbor of
/// `best`, or all of them when nothing has been observed.
fn adjacent_components(g: &Graph, h: &SeparatorHierarchy, level: usize, best: Option<usize>) -> Vec<usize> {
    let mut active: Vec<usize> = match best {
        None => h.components_at(level).collect(),
        Some(v) => g.neighbors(v).iter().filter_map(|&w| h.component_of(w, level)).collect(),
    };
    active.sort_unstable();
    active.dedup();
    active
}

fn audit_non_exploration(
    h: &SeparatorHierarchy,
    result: &SearchResult,
    skipped: &[(usize, Vec<usize>)],
) -> NonExplorationAudit {
    let mut audit = NonExplorationAudit::default();
    for (from_round, comps) in skipped {
        let level = from_round - 1;
        audit.checks += comps.len();
        for (idx, record) in result.transcript.rounds.iter().enumerate().skip(from_round - 1) {
            for &v in &record.batch {
                if let Some(c) = h.component_of(v, level) {
                    if comps.binary_search(&c).is_ok() {
                        audit.violations.push(Violation { round: idx + 1, component: c, vertex: v });
                    }
                }
            }
        }
    }
    audit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::separator_two_round;
    use crate::bounds::det_upper;
    use crate::generators::{complete, cycle, random_tree};
    use crate::oracle::ValueFunction;
    use crate::tree::SpanningTree;

    #[test]
    fn complete_graph_falls_back() {
        let g = complete(8).unwrap();
        let f = ValueFunction::random(8, 0);
        let mut res = separator_t_round(&g, RoundOracle::new(&f, 3), 3, 8, SeparatorMode::Heuristic).unwrap();
        assert_eq!(res.rounds_used, 1);
        assert_eq!(res.total_queries(), 8);
        assert!(res.audit(&g, &f));
    }

    #[test]
    fn parameter_errors() {
        let g = cycle(20).unwrap();
        let f = ValueFunction::random(20, 0);
        assert!(separator_t_round(&g, RoundOracle::new(&f, 3), 1, 2, SeparatorMode::Exact).is_err());
        assert!(separator_t_round(&g, RoundOracle::new(&f, 3), 3, 0, SeparatorMode::Exact).is_err());
        assert!(matches!(
            separator_t_round(&g, RoundOracle::new(&f, 2), 3, 2, SeparatorMode::Exact),
            Err(Error::RoundBudgetExceeded { .. })
        ));
    }

    #[test]
    fn two_rounds_match_two_round_search() {
        for seed in 0..40 {
            let g = random_tree(63, seed).unwrap();
            let f = ValueFunction::random(63, seed);
            let k = optimal_k(63, 1, g.max_degree(), 2)[0];
            let a = separator_t_round(&g, RoundOracle::new(&f, 2), 2, 1, SeparatorMode::Exact).unwrap();
            let b = separator_two_round(&g, RoundOracle::new(&f, 2), k, SeparatorMode::Exact).unwrap();
            if schedule_applies(63, 1, g.max_degree()) {
                assert_eq!(a.transcript, b.transcript);
            }
        }
    }

    #[test]
    fn trees_verify_within_bound() {
        for n in [15, 31, 63] {
            for t in [2, 3, 4] {
                for seed in 0..10 {
                    let g = random_tree(n, seed).unwrap();
                    let tree = SpanningTree::bfs(&g, 0).unwrap();
                    let fs = [ValueFunction::random(n, seed), ValueFunction::staircase(&tree, seed as usize % n).unwrap()];
                    for f in &fs {
                        let (mut res, audit) =
                            separator_t_round_with_audit(&g, RoundOracle::new(f, t), t, 1, SeparatorMode::Exact)
                                .unwrap();
                        assert!(res.audit(&g, f));
                        assert!(audit.is_clean());
                        assert!(res.rounds_used <= t);
                        assert!(res.total_queries() as f64 <= det_upper(n, t, 1, g.max_degree()));
                    }
                }
            }
        }
    }
}
