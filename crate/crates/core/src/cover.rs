//! Vertex covers for the two-round cover algorithm.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest instance accepted by [`min_vertex_cover`].
pub const EXACT_COVER_LIMIT: usize = 24;

pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    first_uncovered_edge(g, cover).is_none()
}

pub fn first_uncovered_edge(g: &Graph, cover: &[usize]) -> Option<(usize, usize)> {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        if v < g.n() {
            inside[v] = true;
        }
    }
    g.edges().find(|&(u, v)| !inside[u] && !inside[v])
}

/// Minimum-cardinality vertex cover by branch and bound over bitmasks.
///
/// Branches on a maximum-degree vertex `v` of the residual graph: either `v`
/// joins the cover, or all of its residual neighbors do. Ties between optimal
/// covers resolve to the first one found, which is deterministic.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > EXACT_COVER_LIMIT {
        return Err(Error::InstanceTooLarge { n, limit: EXACT_COVER_LIMIT });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let all = (1u32 << n) - 1;
    let mut best = all;
    branch(&masks, all, 0, &mut best);
    Ok((0..n).filter(|&v| best & (1 << v) != 0).collect())
}

fn branch(masks: &[u32], alive: u32, chosen: u32, best: &mut u32) {
    if chosen.count_ones() >= best.count_ones() {
        return;
    }
    // residual vertex of maximum degree
    let mut pick = None;
    let mut pick_deg = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (masks[v] & alive).count_ones();
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = chosen;
        return;
    };
    // a cover vertex covers at most `pick_deg` residual edges
    let edges: u32 = {
        let mut total = 0;
        let mut rest = alive;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (masks[u] & alive).count_ones();
        }
        total / 2
    };
    if chosen.count_ones() + edges.div_ceil(pick_deg) >= best.count_ones() {
        return;
    }
    let bit = 1u32 << v;
    branch(masks, alive & !bit, chosen | bit, best);
    let nbrs = masks[v] & alive;
    branch(masks, alive & !nbrs & !bit, chosen | nbrs, best);
}

/// 2-approximate vertex cover: both endpoints of a greedy maximal matching.
pub fn matching_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut inside = vec![false; g.n()];
    for (u, v) in g.edges() {
        if !inside[u] && !inside[v] {
            inside[u] = true;
            inside[v] = true;
        }
    }
    (0..g.n()).filter(|&v| inside[v]).collect()
}
