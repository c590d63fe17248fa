//! Recursive separation of a vertex subset until every piece is small.
//!
//! `shatter(H, K)` returns a set `S` such that every connected component of
//! `H ∖ S` has at most `K` vertices. It applies a balanced separator to `H`,
//! then recurses on both sides; subsets of at most `K` vertices contribute
//! nothing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separator::{find_with_workspace, Balance, SeparatorMode, Workspace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShatterResult {
    /// Sorted union of all separators chosen by the recursion.
    pub separator: Vec<usize>,
    /// Components of `H ∖ separator`, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub k: usize,
}

/// Shatters the whole graph.
pub fn shatter(g: &Graph, k: usize, mode: SeparatorMode) -> Result<ShatterResult> {
    let all: Vec<usize> = (0..g.n()).collect();
    shatter_subset(g, &all, k, mode)
}

/// Shatters the induced subgraph `G[vertices]`.
pub fn shatter_subset(g: &Graph, vertices: &[usize], k: usize, mode: SeparatorMode) -> Result<ShatterResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("shatter threshold must be at least 1".into()));
    }
    let mut vertices = vertices.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if let Some(&bad) = vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidVertex { vertex: bad, n: g.n() });
    }
    let mut ws = Workspace::new(g.n());
    let mut separator = Vec::new();
    let mut pending = vec![vertices.clone()];
    while let Some(part) = pending.pop() {
        if part.len() <= k {
            continue;
        }
        let split = find_with_workspace(&mut ws, g, &part, Balance::TWO_THIRDS, mode, None)?;
        separator.extend_from_slice(&split.separator);
        pending.push(split.b);
        pending.push(split.a);
    }
    separator.sort_unstable();
    let components = ws.components(g, &vertices, &separator);
    debug_assert!(components.iter().all(|c| c.len() <= k));
    Ok(ShatterResult { separator, components, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_binary_tree, cycle, grid, path, random_tree};
    use proptest::prelude::*;

    #[test]
    fn path_shatter() {
        let g = path(10).unwrap();
        let r = shatter(&g, 3, SeparatorMode::Exact).unwrap();
        assert!(r.components.iter().all(|c| c.len() <= 3));
        let covered: usize = r.separator.len() + r.components.iter().map(Vec::len).sum::<usize>();
        assert_eq!(covered, 10);
    }

    #[test]
    fn large_threshold_is_empty() {
        let g = cycle(12).unwrap();
        let r = shatter(&g, 12, SeparatorMode::Heuristic).unwrap();
        assert!(r.separator.is_empty());
        assert_eq!(r.components, vec![(0..12).collect::<Vec<_>>()]);
        assert!(shatter(&g, 0, SeparatorMode::Exact).is_err());
    }

    #[test]
    fn threshold_one_leaves_isolated_vertices() {
        let g = grid(&[4, 4]).unwrap();
        let r = shatter(&g, 1, SeparatorMode::Heuristic).unwrap();
        assert!(r.components.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn exact_tree_size_bound() {
        let g = complete_binary_tree(5).unwrap();
        for k in [1, 2, 4, 8, 16, 32] {
            let r = shatter(&g, k, SeparatorMode::Exact).unwrap();
            assert!(3 * r.separator.len() * k < 3 * g.n(), "k={k} |S|={}", r.separator.len());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn components_respect_threshold(n in 2usize..80, seed in 0u64..1000, k in 1usize..40) {
            let g = random_tree(n, seed).unwrap();
            for mode in [SeparatorMode::Exact, SeparatorMode::Heuristic] {
                let r = shatter(&g, k, mode).unwrap();
                prop_assert!(r.components.iter().all(|c| c.len() <= k));
                let mut seen: Vec<usize> = r.separator.clone();
                seen.extend(r.components.iter().flatten());
                seen.sort_unstable();
                prop_assert_eq!(seen, (0..n).collect::<Vec<_>>());
                if mode == SeparatorMode::Exact {
                    prop_assert!(r.separator.len() * k < 3 * n);
                }
            }
        }
    }
}
