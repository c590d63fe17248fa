//! Instance families.
//!
//! A [`Family`] names a graph family with its parameters; [`Family::generate`]
//! builds the graph. Random families are deterministic for a fixed seed.
//!
//! Text form (used by the CLI and sweep configs):
//!
//! | spec                    | graph                                   |
//! |-------------------------|-----------------------------------------|
//! | `path:N`                | path on N vertices                      |
//! | `cycle:N`               | cycle on N ≥ 3 vertices                 |
//! | `grid:AxBx..`           | lattice with the given side lengths     |
//! | `hypercube:D`           | D-dimensional hypercube                 |
//! | `random-regular:N:D`    | uniform-ish D-regular graph on N vertices |
//! | `random-tree:N`         | uniform labelled tree (Prüfer code)     |
//! | `binary-tree:DEPTH`     | complete binary tree, 2^(DEPTH+1)−1 vertices |
//! | `star:N`                | star K_{1,N−1}                          |
//! | `complete:N`            | complete graph K_N                      |

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded;

const REGULAR_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Grid(Vec<usize>),
    Hypercube(usize),
    RandomRegular { n: usize, degree: usize },
    RandomTree(usize),
    CompleteBinaryTree(usize),
    Star(usize),
    Complete(usize),
}

impl Family {
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Grid(dims) => grid(dims),
            Family::Hypercube(d) => hypercube(*d),
            Family::RandomRegular { n, degree } => random_regular(*n, *degree, seed),
            Family::RandomTree(n) => random_tree(*n, seed),
            Family::CompleteBinaryTree(depth) => complete_binary_tree(*depth),
            Family::Star(n) => star(*n),
            Family::Complete(n) => complete(*n),
        }
    }

    /// A known upper bound on the separation number, when the family has one.
    ///
    /// Trees have 1-vertex balanced separators, cycles 2-vertex ones, and a
    /// k×m grid is split by a middle row or column of min(k, m) vertices; the
    /// value min(k, m) + 1 is used as a safe upper bound for 2-D grids.
    pub fn known_separation_number(&self) -> Option<usize> {
        match self {
            Family::Path(_) | Family::RandomTree(_) | Family::CompleteBinaryTree(_) | Family::Star(_) => Some(1),
            Family::Cycle(_) => Some(2),
            Family::Grid(dims) => match dims.as_slice() {
                [_] => Some(1),
                [a, b] => Some((*a).min(*b) + 1),
                _ => None,
            },
            Family::Hypercube(_) | Family::RandomRegular { .. } | Family::Complete(_) => None,
        }
    }

    pub fn is_tree(&self) -> bool {
        matches!(
            self,
            Family::Path(_) | Family::RandomTree(_) | Family::CompleteBinaryTree(_) | Family::Star(_)
        ) || matches!(self, Family::Grid(d) if d.iter().filter(|&&x| x > 1).count() <= 1)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Grid(dims) => {
                let dims: Vec<String> = dims.iter().map(ToString::to_string).collect();
                write!(f, "grid:{}", dims.join("x"))
            }
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::RandomRegular { n, degree } => write!(f, "random-regular:{n}:{degree}"),
            Family::RandomTree(n) => write!(f, "random-tree:{n}"),
            Family::CompleteBinaryTree(d) => write!(f, "binary-tree:{d}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
        }
    }
}

fn parse_count(s: &str, spec: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?} in family spec {spec:?}")))
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.trim().split(':').collect();
        let arity = |k: usize| {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(Error::Parse(format!("family spec {spec:?} expects {k} parameter(s)")))
            }
        };
        match parts[0] {
            "path" => arity(1).and_then(|_| Ok(Family::Path(parse_count(parts[1], spec)?))),
            "cycle" => arity(1).and_then(|_| Ok(Family::Cycle(parse_count(parts[1], spec)?))),
            "grid" => {
                arity(1)?;
                let dims = parts[1]
                    .split('x')
                    .map(|d| parse_count(d, spec))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Family::Grid(dims))
            }
            "hypercube" => arity(1).and_then(|_| Ok(Family::Hypercube(parse_count(parts[1], spec)?))),
            "random-regular" => {
                arity(2)?;
                Ok(Family::RandomRegular {
                    n: parse_count(parts[1], spec)?,
                    degree: parse_count(parts[2], spec)?,
                })
            }
            "random-tree" => arity(1).and_then(|_| Ok(Family::RandomTree(parse_count(parts[1], spec)?))),
            "binary-tree" => arity(1).and_then(|_| Ok(Family::CompleteBinaryTree(parse_count(parts[1], spec)?))),
            "star" => arity(1).and_then(|_| Ok(Family::Star(parse_count(parts[1], spec)?))),
            "complete" => arity(1).and_then(|_| Ok(Family::Complete(parse_count(parts[1], spec)?))),
            other => Err(Error::Parse(format!("unknown graph family {other:?}"))),
        }
    }
}

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InfeasibleParameters("graph needs at least one vertex".into()))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    nonempty(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::connected(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InfeasibleParameters(format!("cycle needs n ≥ 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::connected(n, &edges)
}

/// Lattice on `dims[0] × dims[1] × …`; vertex ids are mixed-radix with the
/// first coordinate varying fastest. Two vertices are adjacent when they
/// differ by one step in exactly one coordinate.
pub fn grid(dims: &[usize]) -> Result<Graph> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InfeasibleParameters(format!("grid dimensions {dims:?} must be nonempty and positive")));
    }
    let n = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| Error::InfeasibleParameters("grid too large".into()))?;
    let mut edges = Vec::new();
    for v in 0..n {
        let mut stride = 1;
        let mut rest = v;
        for &d in dims {
            let coord = rest % d;
            rest /= d;
            if coord + 1 < d {
                edges.push((v, v + stride));
            }
            stride *= d;
        }
    }
    Graph::connected(n, &edges)
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d >= usize::BITS as usize - 1 {
        return Err(Error::InfeasibleParameters(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))).filter(|&(u, w)| u < w))
        .collect();
    Graph::connected(n, &edges)
}

/// Random `degree`-regular graph by the pairing model, rejecting samples that
/// are not simple or not connected.
pub fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    if degree >= n || !(n * degree).is_multiple_of(2) {
        return Err(Error::InfeasibleParameters(format!(
            "random regular graph needs d < n and n·d even (n={n}, d={degree})"
        )));
    }
    if degree == 0 && n > 1 {
        return Err(Error::InfeasibleParameters("0-regular graph on more than one vertex is disconnected".into()));
    }
    let mut rng = seeded(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    for _ in 0..REGULAR_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = stubs
            .chunks_exact(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        match Graph::connected(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InfeasibleParameters(format!(
        "no simple connected {degree}-regular graph on {n} vertices after {REGULAR_ATTEMPTS} attempts"
    )))
}

/// Uniformly random labelled tree decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    nonempty(n)?;
    if n <= 2 {
        return path(n);
    }
    let mut rng = seeded(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::connected(n, &edges)
}

/// Complete binary tree with levels `0..=depth`; vertex `i` has children
/// `2i+1` and `2i+2`.
pub fn complete_binary_tree(depth: usize) -> Result<Graph> {
    if depth >= 40 {
        return Err(Error::InfeasibleParameters(format!("binary tree depth {depth} too large")));
    }
    let n = (1usize << (depth + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    Graph::connected(n, &edges)
}

/// Star with center 0 and `n − 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    nonempty(n)?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::connected(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    nonempty(n)?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::connected(n, &edges)
}
