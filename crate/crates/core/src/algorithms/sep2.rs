//! Two-round search through a shattering separator.
//!
//! Round 1 queries the separator `S` and finds its minimum `v_min`. Round 2
//! queries every component of `G ∖ S` that contains a neighbor of `v_min`.
//! The output is `v_min` when it beats all its neighbors, and otherwise the
//! minimum of the component holding the smallest neighbor of `v_min`.

use super::{require_rounds, Observed, SearchResult};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::RoundOracle;
use crate::separator::SeparatorMode;
use crate::shatter::shatter;

/// Runs the two-round separator search with shatter threshold `k`. When the
/// separator is empty (`k ≥ n`), everything is queried in round 1.
pub fn separator_two_round(
    g: &Graph,
    mut oracle: RoundOracle<'_>,
    k: usize,
    mode: SeparatorMode,
) -> Result<SearchResult> {
    require_rounds(&oracle, 2)?;
    let split = shatter(g, k.clamp(1, g.n()), mode)?;
    let mut seen = Observed::new(g.n());
    if split.separator.is_empty() {
        let all: Vec<usize> = (0..g.n()).collect();
        seen.query(&mut oracle, &all)?;
        return Ok(SearchResult::finish(seen.best(), oracle));
    }

    seen.query(&mut oracle, &split.separator)?;
    let v_min = seen.best().expect("nonempty separator");

    let mut component_of = vec![usize::MAX; g.n()];
    for (i, comp) in split.components.iter().enumerate() {
        for &v in comp {
            component_of[v] = i;
        }
    }
    let mut adjacent: Vec<usize> = g
        .neighbors(v_min)
        .iter()
        .map(|&w| component_of[w])
        .filter(|&c| c != usize::MAX)
        .collect();
    adjacent.sort_unstable();
    adjacent.dedup();
    let batch: Vec<usize> = adjacent.iter().flat_map(|&c| split.components[c].iter().copied()).collect();
    seen.query(&mut oracle, &batch)?;

    let smallest = g
        .neighbors(v_min)
        .iter()
        .copied()
        .reduce(|a, b| if seen.less(b, a) { b } else { a });
    let output = match smallest {
        Some(u) if seen.less(u, v_min) => {
            // u ≺ v_min rules out u ∈ S, so u sits in a queried component
            let comp = &split.components[component_of[u]];
            comp.iter().copied().reduce(|a, b| if seen.less(b, a) { b } else { a }).expect("nonempty")
        }
        _ => v_min,
    };
    Ok(SearchResult::finish(Some(output), oracle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, path};
    use crate::oracle::ValueFunction;
    use crate::tree::SpanningTree;

    #[test]
    fn degenerate_threshold_queries_all() {
        let g = path(6).unwrap();
        let f = ValueFunction::random(6, 1);
        let mut res = separator_two_round(&g, RoundOracle::new(&f, 2), 6, SeparatorMode::Exact).unwrap();
        assert_eq!(res.rounds_used, 1);
        assert_eq!(res.total_queries(), 6);
        assert!(res.audit(&g, &f));
    }

    #[test]
    fn path_staircase_finds_target() {
        let g = path(25).unwrap();
        let k = (3.0f64 * 25.0 / 2.0).sqrt().ceil() as usize;
        let tree = SpanningTree::bfs(&g, 0).unwrap();
        for z in 0..25 {
            let f = ValueFunction::staircase(&tree, z).unwrap();
            let res = separator_two_round(&g, RoundOracle::new(&f, 2), k, SeparatorMode::Exact).unwrap();
            assert_eq!(res.output, Some(z));
            let s = res.transcript.rounds[0].batch.len();
            assert!(res.total_queries() <= s + 2 * k);
        }
    }

    #[test]
    fn grid_random_functions_verify() {
        let g = grid(&[8, 8]).unwrap();
        for seed in 0..200 {
            let f = ValueFunction::random(64, seed);
            let mut res = separator_two_round(&g, RoundOracle::new(&f, 2), 14, SeparatorMode::Heuristic).unwrap();
            assert!(res.audit(&g, &f), "seed {seed}");
            assert!(res.rounds_used <= 2);
        }
    }
}
