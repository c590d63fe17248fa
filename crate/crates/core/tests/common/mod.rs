//! Fixtures shared by the integration tests.
//!
//! The 16-vertex example instance is written with 1-based labels;
//! every fixture here keeps those labels and [`id`] shifts label `k` to
//! vertex id `k − 1`.

#![allow(dead_code)]

use lsr_core::{Graph, SpanningTree};

/// Label `k` → vertex id `k − 1`.
pub fn id(label: usize) -> usize {
    label - 1
}

pub fn ids(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|&l| id(l)).collect()
}

/// Tree edges (parent, child) of the example spanning tree rooted at label 1.
pub const EXAMPLE_TREE_EDGES: [(usize, usize); 15] = [
    (1, 2),
    (1, 3),
    (2, 4),
    (2, 7),
    (4, 5),
    (4, 6),
    (3, 8),
    (3, 9),
    (3, 10),
    (8, 11),
    (8, 12),
    (8, 13),
    (8, 14),
    (10, 15),
    (10, 16),
];

/// Non-tree edges of the example graph.
pub const EXAMPLE_EXTRA_EDGES: [(usize, usize); 12] = [
    (4, 8),
    (8, 10),
    (5, 11),
    (6, 12),
    (11, 13),
    (13, 16),
    (2, 3),
    (4, 7),
    (6, 11),
    (9, 10),
    (13, 14),
    (15, 16),
];

/// Round-1 queries of the example search.
pub const EXAMPLE_Q1: [usize; 3] = [2, 3, 10];

/// Candidate set after the round-1 queries, for each target label 1..=16.
pub const EXAMPLE_CANDIDATES: [(usize, &[usize]); 16] = [
    (1, &[1]),
    (2, &[2, 4, 5, 6, 7]),
    (3, &[3, 8, 9, 11, 12, 13, 14]),
    (4, &[2, 4, 5, 6, 7]),
    (5, &[2, 4, 5, 6, 7]),
    (6, &[2, 4, 5, 6, 7]),
    (7, &[2, 4, 5, 6, 7]),
    (8, &[3, 8, 9, 11, 12, 13, 14]),
    (9, &[3, 8, 9, 11, 12, 13, 14]),
    (10, &[10, 15, 16]),
    (11, &[3, 8, 9, 11, 12, 13, 14]),
    (12, &[3, 8, 9, 11, 12, 13, 14]),
    (13, &[3, 8, 9, 11, 12, 13, 14]),
    (14, &[3, 8, 9, 11, 12, 13, 14]),
    (15, &[10, 15, 16]),
    (16, &[10, 15, 16]),
];

/// Staircase values for target label 4, as (label, value).
pub const EXAMPLE_F4: [(usize, i64); 16] = [
    (1, 0),
    (2, -1),
    (3, 1),
    (4, -2),
    (5, 3),
    (6, 3),
    (7, 2),
    (8, 2),
    (9, 2),
    (10, 2),
    (11, 3),
    (12, 3),
    (13, 3),
    (14, 3),
    (15, 3),
    (16, 3),
];

pub fn example_graph() -> Graph {
    let edges: Vec<(usize, usize)> = EXAMPLE_TREE_EDGES
        .iter()
        .chain(&EXAMPLE_EXTRA_EDGES)
        .map(|&(a, b)| (id(a), id(b)))
        .collect();
    Graph::connected(16, &edges).expect("example graph is connected")
}

/// The example spanning tree built directly from its parent links.
pub fn example_tree() -> SpanningTree {
    let mut parent = vec![0; 16];
    for &(p, c) in &EXAMPLE_TREE_EDGES {
        parent[id(c)] = id(p);
    }
    SpanningTree::from_parents(0, parent).expect("valid tree")
}
