//! Two-round search through a vertex cover.
//!
//! Round 1 queries the cover and finds its minimum `Z`. Round 2 queries the
//! neighbors of `Z` outside the cover. A neighbor `w ≺ Z` lies outside the
//! cover, so all of its neighbors are cover vertices and exceed `Z ≻ w`.

use super::{require_rounds, Observed, SearchResult};
use crate::cover::first_uncovered_edge;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::RoundOracle;

/// Runs the two-round cover search. An edgeless graph has an empty cover;
/// its single vertex is queried in round 1 instead.
pub fn vertex_cover_two_round(g: &Graph, mut oracle: RoundOracle<'_>, cover: &[usize]) -> Result<SearchResult> {
    for &v in cover {
        g.check_vertex(v)?;
    }
    if let Some((u, v)) = first_uncovered_edge(g, cover) {
        return Err(Error::NotACover(u, v));
    }
    require_rounds(&oracle, 2)?;
    let mut cover = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let mut seen = Observed::new(g.n());
    if cover.is_empty() {
        let all: Vec<usize> = (0..g.n()).collect();
        seen.query(&mut oracle, &all)?;
        return Ok(SearchResult::finish(seen.best(), oracle));
    }

    seen.query(&mut oracle, &cover)?;
    let z = seen.best().expect("nonempty cover");
    let outside: Vec<usize> = g.neighbors(z).iter().copied().filter(|&w| seen.get(w).is_none()).collect();
    seen.query(&mut oracle, &outside)?;

    let smallest = g.neighbors(z).iter().copied().reduce(|a, b| if seen.less(b, a) { b } else { a });
    let output = match smallest {
        Some(w) if seen.less(w, z) => w,
        _ => z,
    };
    Ok(SearchResult::finish(Some(output), oracle))
}
