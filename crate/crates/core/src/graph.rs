//! Undirected simple graphs with sorted adjacency lists.
//!
//! Vertices are the integers `0..n`. A [`Graph`] is immutable once built and
//! is shared read-only by every algorithm, oracle and audit in the crate.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a validated, connected graph. Duplicate edges are merged.
    pub fn connected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let g = Self::simple(n, edges)?;
        if n == 0 {
            return Err(Error::InvalidParameter("a connected graph needs at least one vertex".into()));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Builds a validated simple graph without requiring connectivity.
    pub fn simple(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum vertex degree, written Δ in the bounds.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// All vertices within distance `radius` of `center`, in BFS order
    /// (layer by layer, sorted adjacency within a layer).
    pub fn ball(&self, center: usize, radius: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut out = vec![center];
        seen[center] = true;
        let mut frontier = vec![center];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend_from_slice(&next);
            frontier = next;
        }
        out
    }

    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let d = self.distances_from(v);
        d.iter().try_fold(0, |acc, x| x.map(|x| acc.max(x)))
    }

    /// Diameter of a connected graph (`None` when disconnected).
    pub fn diameter(&self) -> Option<usize> {
        (0..self.n).try_fold(0, |acc, v| self.eccentricity(v).map(|e| acc.max(e)))
    }

    /// Parses the text format: a header `n m` followed by `m` lines `u v`.
    /// The result must be connected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace().map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a nonnegative integer, found {tok:?}")))
        });
        let mut next = |what: &str| {
            tokens
                .next()
                .unwrap_or_else(|| Err(Error::Parse(format!("unexpected end of input reading {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            edges.push((u, v));
        }
        if tokens.next().is_some() {
            return Err(Error::Parse("trailing data after the last edge".into()));
        }
        Self::connected(n, &edges)
    }

    /// Serializes to the text format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Whether `v` is a local minimum: no neighbor holds a strictly smaller value.
pub fn is_local_minimum<T: PartialOrd>(g: &Graph, values: &[T], v: usize) -> bool {
    g.neighbors(v).iter().all(|&u| values[v] <= values[u])
}

/// Exhaustive local-minimum oracle.
pub fn all_local_minima<T: PartialOrd>(g: &Graph, values: &[T]) -> Vec<usize> {
    (0..g.n()).filter(|&v| is_local_minimum(g, values, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::connected(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::connected(n, &edges).unwrap()
    }

    #[test]
    fn smallest_graphs() {
        let g = Graph::connected(2, &[(0, 1)]).unwrap();
        assert_eq!(g.max_degree(), 1);
        assert_eq!(g.edge_count(), 1);

        let k3 = Graph::connected(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.max_degree(), 2);
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::connected(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert_eq!(Graph::connected(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::connected(3, &[(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        );
        assert!(Graph::simple(4, &[(0, 1), (2, 3)]).is_ok());
    }

    #[test]
    fn duplicate_edges_are_merged() {
        let g = Graph::connected(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn degrees() {
        let star = Graph::connected(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.max_degree(), 4);
        assert_eq!(cycle(6).max_degree(), 2);
    }

    #[test]
    fn balls() {
        let p = path(5);
        let mut b = p.ball(2, 1);
        b.sort_unstable();
        assert_eq!(b, vec![1, 2, 3]);
        assert_eq!(p.ball(4, 0), vec![4]);
        assert_eq!(cycle(7).ball(0, 3).len(), 7);
        assert_eq!(p.diameter(), Some(4));
    }

    #[test]
    fn local_minima() {
        let p = path(5);
        assert_eq!(all_local_minima(&p, &[3, 1, 2, 0, 4]), vec![1, 3]);
        assert_eq!(all_local_minima(&p, &[7; 5]), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn text_format() {
        let g = cycle(5);
        let text = g.to_text();
        assert!(text.starts_with("5 5\n"));
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert!(matches!(Graph::parse("3 2\n0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(Graph::parse("3 1\n0 x\n"), Err(Error::Parse(_))));
        assert_eq!(Graph::parse("4 2\n0 1\n2 3\n"), Err(Error::Disconnected));
    }
}
