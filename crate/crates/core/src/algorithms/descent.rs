//! Steepest descent and its round-parallel warm-started variant.
//!
//! The warm-started search samples `q1` vertices uniformly with replacement
//! in round 1 and starts from their ≺-minimum. Each later round queries the
//! ball of radius `r + 1` around the current vertex, which reveals enough of
//! `f` to simulate `r` steepest-descent steps locally. If the simulated path
//! stops at a local minimum the search outputs it; otherwise it moves to the
//! path's `r`-th vertex. After `T = t − 1` such rounds it reports failure.

use rand::Rng;
use serde::Serialize;

use super::{require_rounds, Observed, SearchResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{RoundOracle, Value};
use crate::rng::seeded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DescentParams {
    /// Warm-start sample count.
    pub q1: usize,
    /// Descent steps simulated per round.
    pub r: usize,
    /// Search rounds after the warm start (`t − 1`).
    pub rounds: usize,
}

/// Whether ball queries re-ask for values already seen in earlier rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BallQueries {
    #[default]
    Requery,
    SkipKnown,
}

/// Parameters guaranteeing `(q1 + 1)·T·r ≥ 10n`:
/// `Δ ≤ 2`: `q1 = ⌈√(20n)⌉`, `r = ⌈√(5n)/T⌉`;
/// `Δ ≥ 3`: `r = ⌈½·log_{Δ−1} n⌉`, `q1 = ⌈10n/(T·r)⌉`.
pub fn choose_descent_params(n: usize, delta: usize, t: usize) -> Result<DescentParams> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("warm-started descent needs t ≥ 2, got {t}")));
    }
    let n = n.max(1) as u128;
    let big_t = (t - 1) as u128;
    let (q1, r) = if delta <= 2 {
        let q1 = ceil_sqrt(20 * n);
        // r·T ≥ √(5n) holds for an integer r·T exactly when r·T ≥ ⌈√(5n)⌉
        (q1, ceil_sqrt(5 * n).div_ceil(big_t))
    } else {
        // smallest r with (Δ−1)^{2r} ≥ n
        let base = (delta - 1) as u128;
        let mut r = 0u128;
        let mut reach = 1u128;
        while reach < n {
            reach = reach.saturating_mul(base * base);
            r += 1;
        }
        let r = r.max(1);
        ((10 * n).div_ceil(big_t * r), r)
    };
    Ok(DescentParams { q1: q1.max(1) as usize, r: r.max(1) as usize, rounds: big_t as usize })
}

fn ceil_sqrt(x: u128) -> u128 {
    let mut s = (x as f64).sqrt() as u128;
    while s * s > x {
        s -= 1;
    }
    while s * s < x {
        s += 1;
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentPath {
    /// Visited vertices, starting with the start vertex.
    pub path: Vec<usize>,
    /// The last vertex has no ≺-smaller neighbor.
    pub reached_minimum: bool,
}

impl DescentPath {
    pub fn steps(&self) -> usize {
        self.path.len() - 1
    }

    pub fn end(&self) -> usize {
        *self.path.last().expect("path has a start")
    }
}

/// Follows the ≺-smallest improving neighbor for at most `max_steps` steps
/// using only the `known` values.
pub fn steepest_descent(g: &Graph, known: &[Option<Value>], start: usize, max_steps: usize) -> Result<DescentPath> {
    g.check_vertex(start)?;
    let key = |v: usize| known.get(v).copied().flatten().map(|x| (x, v)).ok_or(Error::MissingValue(v));
    let mut path = vec![start];
    let mut cur = key(start)?;
    loop {
        let mut next = cur;
        for &w in g.neighbors(cur.1) {
            let kw = key(w)?;
            if kw < next {
                next = kw;
            }
        }
        if next == cur {
            return Ok(DescentPath { path, reached_minimum: true });
        }
        if path.len() > max_steps {
            return Ok(DescentPath { path, reached_minimum: false });
        }
        path.push(next.1);
        cur = next;
    }
}

/// Runs the warm-started parallel descent with sampling seed `seed`.
pub fn parallel_warm_start(
    g: &Graph,
    mut oracle: RoundOracle<'_>,
    params: DescentParams,
    seed: u64,
    ball_queries: BallQueries,
) -> Result<SearchResult> {
    if params.q1 == 0 || params.r == 0 || params.rounds == 0 {
        return Err(Error::InvalidParameter(format!("descent parameters must be positive: {params:?}")));
    }
    let n = g.n();
    let mut seen = Observed::new(n);
    if n == 1 {
        require_rounds(&oracle, 1)?;
        seen.query(&mut oracle, &[0])?;
        return Ok(SearchResult::finish(Some(0), oracle));
    }
    require_rounds(&oracle, params.rounds + 1)?;

    let mut rng = seeded(seed);
    let sample: Vec<usize> = (0..params.q1).map(|_| rng.gen_range(0..n)).collect();
    seen.query(&mut oracle, &sample)?;
    let mut current = seen.best().expect("q1 ≥ 1");

    for _ in 0..params.rounds {
        let mut ball = g.ball(current, params.r + 1);
        if ball_queries == BallQueries::SkipKnown {
            ball.retain(|&v| seen.get(v).is_none());
        }
        seen.query(&mut oracle, &ball)?;
        let walk = steepest_descent(g, seen.known(), current, params.r)?;
        if walk.reached_minimum {
            return Ok(SearchResult::finish(Some(walk.end()), oracle));
        }
        current = walk.end();
    }
    Ok(SearchResult::finish(None, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, random_regular};
    use crate::oracle::ValueFunction;
    use proptest::prelude::*;

    fn all_known(f: &ValueFunction) -> Vec<Option<Value>> {
        f.values().iter().copied().map(Some).collect()
    }

    #[test]
    fn parameter_examples() {
        assert_eq!(choose_descent_params(100, 2, 2).unwrap(), DescentParams { q1: 45, r: 23, rounds: 1 });
        assert_eq!(choose_descent_params(4096, 3, 3).unwrap(), DescentParams { q1: 3414, r: 6, rounds: 2 });
        assert!(choose_descent_params(100, 2, 1).is_err());
    }

    #[test]
    fn descent_basics() {
        let g = path(5).unwrap();
        let f = ValueFunction::from_ints([4, 3, 2, 1, 0]);
        let walk = steepest_descent(&g, &all_known(&f), 0, 10).unwrap();
        assert_eq!(walk.path, vec![0, 1, 2, 3, 4]);
        assert!(walk.reached_minimum);
        let stay = steepest_descent(&g, &all_known(&f), 4, 10).unwrap();
        assert_eq!(stay.steps(), 0);
        let short = steepest_descent(&g, &all_known(&f), 0, 2).unwrap();
        assert_eq!(short.path, vec![0, 1, 2]);
        assert!(!short.reached_minimum);
        let mut partial = all_known(&f);
        partial[2] = None;
        assert_eq!(steepest_descent(&g, &partial, 0, 10), Err(Error::MissingValue(2)));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::connected(1, &[]).unwrap();
        let f = ValueFunction::from_ints([7]);
        let params = DescentParams { q1: 5, r: 3, rounds: 2 };
        let res = parallel_warm_start(&g, RoundOracle::new(&f, 3), params, 1, BallQueries::Requery).unwrap();
        assert_eq!(res.output, Some(0));
        assert_eq!(res.total_queries(), 1);
    }

    #[test]
    fn outputs_are_local_minima_within_cost() {
        for (g, t) in [(cycle(101).unwrap(), 2), (random_regular(256, 3, 4).unwrap(), 3)] {
            let params = choose_descent_params(g.n(), g.max_degree(), t).unwrap();
            let max_ball = (0..g.n()).map(|v| g.ball(v, params.r + 1).len()).max().unwrap();
            let mut successes = 0;
            for seed in 0..200 {
                let f = ValueFunction::random(g.n(), seed + 1000);
                let mut res = parallel_warm_start(&g, RoundOracle::new(&f, t), params, seed, BallQueries::Requery).unwrap();
                assert!(res.total_queries() <= params.q1 + params.rounds * max_ball);
                if res.output.is_some() {
                    assert!(res.audit(&g, &f));
                    successes += 1;
                }
            }
            assert!(successes >= 160, "{successes}");
        }
    }

    proptest! {
        #[test]
        fn params_cover_ten_n(n in 1usize..200_000, delta in 1usize..12, t in 2usize..12) {
            let p = choose_descent_params(n, delta, t).unwrap();
            prop_assert!((p.q1 as u128 + 1) * p.rounds as u128 * p.r as u128 >= 10 * n as u128);
        }

        #[test]
        fn descent_rank_strictly_decreases(n in 2usize..60, seed in 0u64..10_000) {
            let g = crate::generators::random_tree(n, seed).unwrap();
            let f = ValueFunction::random(n, seed);
            let ranks = f.ranks();
            let start = seed as usize % n;
            let walk = steepest_descent(&g, &all_known(&f), start, n).unwrap();
            prop_assert!(walk.reached_minimum);
            prop_assert!(walk.path.windows(2).all(|w| ranks[w[1]] < ranks[w[0]]));
            prop_assert!(walk.steps() < ranks[start]);
            prop_assert!(f.is_local_minimum(&g, walk.end()));
        }
    }
}
