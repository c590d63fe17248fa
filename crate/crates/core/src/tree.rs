//! Rooted spanning trees: parent links, depths, ancestor paths and subtrees.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    /// `parent[root] == root`.
    parent: Vec<usize>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// Euler-tour entry/exit times for O(1) ancestor tests.
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl SpanningTree {
    /// Breadth-first spanning tree of a connected graph. With sorted
    /// adjacency the result is deterministic, and tree depth equals graph
    /// distance from the root.
    pub fn bfs(g: &Graph, root: usize) -> Result<Self> {
        g.check_vertex(root)?;
        let n = g.n();
        let mut parent = vec![usize::MAX; n];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent.contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
        Self::from_parents(root, parent)
    }

    /// Builds a tree from explicit parent links (`parent[root] == root`).
    pub fn from_parents(root: usize, parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        if root >= n {
            return Err(Error::InvalidVertex { vertex: root, n });
        }
        if parent[root] != root {
            return Err(Error::InvalidParameter("root must be its own parent".into()));
        }
        let mut children = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            if p >= n {
                return Err(Error::InvalidVertex { vertex: p, n });
            }
            if v != root {
                if p == v {
                    return Err(Error::InvalidParameter(format!("vertex {v} is its own parent")));
                }
                children[p].push(v);
            }
        }
        // Iterative DFS from the root; every vertex must be reached exactly once.
        let mut depth = vec![usize::MAX; n];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut clock = 0;
        let mut stack = vec![(root, 0usize)];
        depth[root] = 0;
        tin[root] = clock;
        clock += 1;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&c) = children[u].get(*next) {
                *next += 1;
                depth[c] = depth[u] + 1;
                tin[c] = clock;
                clock += 1;
                stack.push((c, 0));
            } else {
                tout[u] = clock;
                stack.pop();
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(Error::InvalidParameter("parent links contain a cycle or do not span".into()));
        }
        Ok(Self { root, parent, depth, children, tin, tout })
    }

    /// Checks that every parent link is an edge of `g` and the tree spans it.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        self.n() == g.n() && (0..self.n()).all(|v| v == self.root || g.has_edge(v, self.parent[v]))
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (v != self.root).then(|| self.parent[v])
    }

    /// Tree distance from the root.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// `u ⪯ v`: `u` lies on the root path of `v` (every vertex is its own ancestor).
    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        self.tin[u] <= self.tin[v] && self.tout[v] <= self.tout[u]
    }

    /// The root path of `v`, ordered root → `v`, both ends included.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.root {
            cur = self.parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// All descendants of `x`, including `x`, sorted by id.
    pub fn subtree(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend_from_slice(&self.children[u]);
        }
        out.sort_unstable();
        out
    }

    pub fn subtree_size(&self, x: usize) -> usize {
        self.tout[x] - self.tin[x]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).filter(move |&v| v != self.root).map(move |v| (self.parent[v], v))
    }
}
