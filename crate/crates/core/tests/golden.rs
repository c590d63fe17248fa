//! Golden fixtures from the 16-vertex example instance.

mod common;

use common::*;
use lsr_core::adversary::{candidate_set, signature, Sign, SignHistory};
use lsr_core::{SpanningTree, Value, ValueFunction};

fn history_for(tree: &SpanningTree, target: usize, q: &[usize]) -> SignHistory {
    let f = ValueFunction::staircase(tree, target).unwrap();
    let signs = q
        .iter()
        .map(|&v| match f.value(v).signum() {
            -1 => Sign::Neg,
            0 => Sign::Zero,
            _ => Sign::Pos,
        })
        .collect();
    let mut h = SignHistory::default();
    h.push_round(q.to_vec(), signs);
    h
}

#[test]
fn bfs_from_label_one_reproduces_the_fixture_tree() {
    let g = example_graph();
    let tree = example_tree();
    assert!(tree.is_spanning_tree_of(&g));
    let bfs = SpanningTree::bfs(&g, id(1)).unwrap();
    for v in 0..16 {
        assert_eq!(bfs.parent(v), tree.parent(v), "parent of label {}", v + 1);
    }
}

#[test]
fn candidate_set_table() {
    let tree = example_tree();
    let q = ids(&EXAMPLE_Q1);
    for &(target, expected) in &EXAMPLE_CANDIDATES {
        let h = history_for(&tree, id(target), &q);
        let cs = candidate_set(&tree, &h).unwrap();
        assert_eq!(cs.members, ids(expected), "target label {target}");
        assert!(cs.members.contains(&id(target)));
    }
}

#[test]
fn staircase_values_for_target_four() {
    let f = ValueFunction::staircase(&example_tree(), id(4)).unwrap();
    for &(label, v) in &EXAMPLE_F4 {
        assert_eq!(f.value(id(label)), Value::Int(v), "label {label}");
    }
    let g = example_graph();
    assert_eq!(f.all_local_minima(&g), vec![id(4)]);
}

#[test]
fn signatures_of_example_targets() {
    let tree = example_tree();
    let q = ids(&EXAMPLE_Q1);
    assert_eq!(signature(&tree, &q, id(1)), Vec::<usize>::new());
    assert_eq!(signature(&tree, &q, id(5)), ids(&[2]));
    assert_eq!(signature(&tree, &q, id(16)), ids(&[3, 10]));
}
