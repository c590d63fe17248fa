//! Balanced vertex separators of induced subgraphs.
//!
//! A separator of a vertex subset `V` is a split `V = S ∪ A ∪ B` into
//! disjoint parts with no edge between `A` and `B` and `|A|, |B| ≤ α|V|`.
//!
//! Two search modes are provided:
//!
//! * [`SeparatorMode::Exact`] enumerates candidate sets `S` by increasing
//!   size, in lexicographic order within a size, and returns the first one
//!   for which the components of `V ∖ S` can be packed into two sides. The
//!   result has minimum `|S|` and is the lexicographically smallest such set.
//! * [`SeparatorMode::Heuristic`] tries breadth-first layer cuts from a few
//!   start vertices plus a prefix-boundary cut, keeps the valid ones, greedily
//!   moves separator vertices back into a side when that keeps the split
//!   valid, and returns the smallest result.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of candidate sets exact mode may examine before giving up.
pub const EXACT_CANDIDATE_BUDGET: u64 = 5_000_000;

/// Rational balance parameter α ∈ [1/2, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Balance {
    num: u64,
    den: u64,
}

impl Balance {
    pub const TWO_THIRDS: Balance = Balance { num: 2, den: 3 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || 2 * num < den || num >= den {
            return Err(Error::InvalidBalance(if den == 0 { f64::NAN } else { num as f64 / den as f64 }));
        }
        Ok(Self { num, den })
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Largest side size allowed for a subset of `size` vertices: ⌊α·size⌋.
    pub fn cap(self, size: usize) -> usize {
        (size as u128 * self.num as u128 / self.den as u128) as usize
    }
}

impl Default for Balance {
    fn default() -> Self {
        Self::TWO_THIRDS
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeparatorMode {
    Exact,
    #[default]
    Heuristic,
}

impl FromStr for SeparatorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "heuristic" => Ok(Self::Heuristic),
            other => Err(Error::Parse(format!("unknown separator mode {other:?}"))),
        }
    }
}

impl fmt::Display for SeparatorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Exact => "exact",
            Self::Heuristic => "heuristic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorResult {
    pub separator: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub balance: Balance,
}

impl SeparatorResult {
    /// Checks the three defining properties against `vertices` by direct
    /// scan: disjoint cover, balance, and no edge between the sides. Subsets
    /// of at most one vertex are exempt from the balance condition.
    pub fn is_valid(&self, g: &Graph, vertices: &[usize]) -> bool {
        let mut side = vec![0u8; g.n()];
        for (part, label) in [(&self.separator, 1u8), (&self.a, 2), (&self.b, 3)] {
            for &v in part.iter() {
                if v >= g.n() || side[v] != 0 {
                    return false;
                }
                side[v] = label;
            }
        }
        let covered = self.separator.len() + self.a.len() + self.b.len();
        if covered != vertices.len() || vertices.iter().any(|&v| v >= g.n() || side[v] == 0) {
            return false;
        }
        let cap = self.balance.cap(vertices.len());
        if vertices.len() > 1 && (self.a.len() > cap || self.b.len() > cap) {
            return false;
        }
        self.a.iter().all(|&u| g.neighbors(u).iter().all(|&w| side[w] != 3))
    }
}

/// Stamp-based scratch space so repeated component scans over subsets of a
/// large graph do not reallocate `O(n)` buffers.
pub(crate) struct Workspace {
    mark: Vec<u32>,
    stamp: u32,
}

impl Workspace {
    pub(crate) fn new(n: usize) -> Self {
        Self { mark: vec![0; n], stamp: 0 }
    }

    fn next_stamp(&mut self) -> u32 {
        if self.stamp >= u32::MAX - 2 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 0;
        }
        self.stamp += 2;
        self.stamp
    }

    /// Connected components of `G[vertices ∖ removed]`, each sorted, listed
    /// by their smallest vertex (given `vertices` sorted).
    pub(crate) fn components(&mut self, g: &Graph, vertices: &[usize], removed: &[usize]) -> Vec<Vec<usize>> {
        let live = self.next_stamp();
        let done = live + 1;
        for &v in vertices {
            self.mark[v] = live;
        }
        for &v in removed {
            self.mark[v] = done;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for &start in vertices {
            if self.mark[start] != live {
                continue;
            }
            self.mark[start] = done;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in g.neighbors(u) {
                    if self.mark[w] == live {
                        self.mark[w] = done;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first layers of `G[vertices]` from `start`.
    fn layers(&mut self, g: &Graph, vertices: &[usize], start: usize) -> Vec<Vec<usize>> {
        let live = self.next_stamp();
        let done = live + 1;
        for &v in vertices {
            self.mark[v] = live;
        }
        self.mark[start] = done;
        let mut layers = vec![vec![start]];
        loop {
            let mut next = Vec::new();
            for &u in layers.last().expect("nonempty") {
                for &w in g.neighbors(u) {
                    if self.mark[w] == live {
                        self.mark[w] = done;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                return layers;
            }
            layers.push(next);
        }
    }
}

/// Splits items into two sides with each side total at most `cap`.
/// Returns `true` for items assigned to side A.
pub(crate) fn pack_two(sizes: &[usize], cap: usize) -> Option<Vec<bool>> {
    let total: usize = sizes.iter().sum();
    if sizes.iter().any(|&s| s > cap) || total > 2 * cap {
        return None;
    }
    // largest-first into the lighter side
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by(|&i, &j| sizes[j].cmp(&sizes[i]).then(i.cmp(&j)));
    let (mut load_a, mut load_b) = (0, 0);
    let mut side = vec![false; sizes.len()];
    for &i in &order {
        if load_a <= load_b {
            side[i] = true;
            load_a += sizes[i];
        } else {
            load_b += sizes[i];
        }
    }
    if load_a <= cap && load_b <= cap {
        return Some(side);
    }
    // subset-sum over side-A totals with per-item reachability rows
    let words = total / 64 + 1;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(sizes.len() + 1);
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    rows.push(reach.clone());
    for &s in sizes {
        let mut next = reach.clone();
        shift_or(&mut next, &reach, s);
        reach = next;
        rows.push(reach.clone());
    }
    let lo = total - cap;
    let target = (lo..=cap).find(|&x| reach[x / 64] >> (x % 64) & 1 == 1)?;
    let mut side = vec![false; sizes.len()];
    let mut x = target;
    for i in (0..sizes.len()).rev() {
        let without = rows[i][x / 64] >> (x % 64) & 1 == 1;
        if !without {
            side[i] = true;
            x -= sizes[i];
        }
    }
    debug_assert_eq!(x, 0);
    Some(side)
}

fn shift_or(dst: &mut [u64], src: &[u64], shift: usize) {
    let (word, bit) = (shift / 64, shift % 64);
    for i in (word..dst.len()).rev() {
        let mut v = src[i - word] << bit;
        if bit > 0 && i > word {
            v |= src[i - word - 1] >> (64 - bit);
        }
        dst[i] |= v;
    }
}

/// Tries `removed` as a separator of `vertices`; on success returns the split.
fn split_with(
    ws: &mut Workspace,
    g: &Graph,
    vertices: &[usize],
    removed: &[usize],
    balance: Balance,
) -> Option<SeparatorResult> {
    let cap = balance.cap(vertices.len());
    let comps = ws.components(g, vertices, removed);
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let side = pack_two(&sizes, cap)?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (comp, to_a) in comps.into_iter().zip(side) {
        if to_a {
            a.extend(comp);
        } else {
            b.extend(comp);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    let mut separator = removed.to_vec();
    separator.sort_unstable();
    Some(SeparatorResult { separator, a, b, balance })
}

pub fn find_balanced_separator(
    g: &Graph,
    vertices: &[usize],
    balance: Balance,
    mode: SeparatorMode,
    budget: Option<usize>,
) -> Result<SeparatorResult> {
    let mut ws = Workspace::new(g.n());
    find_with_workspace(&mut ws, g, vertices, balance, mode, budget)
}

pub(crate) fn find_with_workspace(
    ws: &mut Workspace,
    g: &Graph,
    vertices: &[usize],
    balance: Balance,
    mode: SeparatorMode,
    budget: Option<usize>,
) -> Result<SeparatorResult> {
    let mut vertices = vertices.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if let Some(&bad) = vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidVertex { vertex: bad, n: g.n() });
    }
    if vertices.len() <= 1 {
        return Ok(SeparatorResult { separator: Vec::new(), a: Vec::new(), b: vertices, balance });
    }
    let max_size = budget.unwrap_or(vertices.len()).min(vertices.len());
    match mode {
        SeparatorMode::Exact => exact(ws, g, &vertices, balance, max_size),
        SeparatorMode::Heuristic => heuristic(ws, g, &vertices, balance, max_size),
    }
}

fn exact(ws: &mut Workspace, g: &Graph, vertices: &[usize], balance: Balance, max_size: usize) -> Result<SeparatorResult> {
    let mut examined = 0u64;
    let len = vertices.len();
    for k in 0..=max_size {
        // lexicographic k-combinations of positions
        let mut idx: Vec<usize> = (0..k).collect();
        let mut chosen = Vec::with_capacity(k);
        loop {
            examined += 1;
            if examined > EXACT_CANDIDATE_BUDGET {
                return Err(Error::ExactBudgetExceeded { budget: EXACT_CANDIDATE_BUDGET });
            }
            chosen.clear();
            chosen.extend(idx.iter().map(|&i| vertices[i]));
            if let Some(res) = split_with(ws, g, vertices, &chosen, balance) {
                return Ok(res);
            }
            // advance to the next combination
            let mut i = k;
            while i > 0 && idx[i - 1] == len - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Err(Error::NoSeparator)
}

fn heuristic(
    ws: &mut Workspace,
    g: &Graph,
    vertices: &[usize],
    balance: Balance,
    max_size: usize,
) -> Result<SeparatorResult> {
    let mut best: Option<SeparatorResult> = None;
    let consider = |cand: SeparatorResult, best: &mut Option<SeparatorResult>| {
        let better = match best {
            None => true,
            Some(b) => (cand.separator.len(), &cand.separator) < (b.separator.len(), &b.separator),
        };
        if better {
            *best = Some(cand);
        }
    };

    if let Some(res) = split_with(ws, g, vertices, &[], balance) {
        return Ok(res);
    }

    let comps = ws.components(g, vertices, &[]);
    let largest = comps
        .iter()
        .max_by(|x, y| x.len().cmp(&y.len()).then(y[0].cmp(&x[0])))
        .expect("at least two vertices")
        .clone();

    for start in start_vertices(ws, g, &largest) {
        let layers = ws.layers(g, &largest, start);
        for layer in &layers {
            if let Some(res) = split_with(ws, g, vertices, layer, balance) {
                consider(shrink(g, res, vertices.len()), &mut best);
            }
        }
    }

    if let Some(res) = prefix_boundary_cut(ws, g, vertices, &comps, balance) {
        consider(shrink(g, res, vertices.len()), &mut best);
    }

    match best {
        Some(res) if res.separator.len() <= max_size => Ok(res),
        _ => Err(Error::NoSeparator),
    }
}

/// Smallest vertex of the component plus a double-sweep pair of far-apart
/// vertices and the vertex midway along the first sweep.
fn start_vertices(ws: &mut Workspace, g: &Graph, comp: &[usize]) -> Vec<usize> {
    let first = comp[0];
    let sweep1 = ws.layers(g, comp, first);
    let far1 = *sweep1.last().and_then(|l| l.iter().min()).expect("nonempty");
    let sweep2 = ws.layers(g, comp, far1);
    let far2 = *sweep2.last().and_then(|l| l.iter().min()).expect("nonempty");
    let mid = *sweep2[sweep2.len() / 2].iter().min().expect("nonempty");
    let mut starts = vec![first, far1, far2, mid];
    starts.sort_unstable();
    starts.dedup();
    starts
}

/// Takes the first `cap` vertices of a breadth-first ordering as side A and
/// their outer boundary as the separator.
fn prefix_boundary_cut(
    ws: &mut Workspace,
    g: &Graph,
    vertices: &[usize],
    comps: &[Vec<usize>],
    balance: Balance,
) -> Option<SeparatorResult> {
    let cap = balance.cap(vertices.len());
    let mut order = Vec::with_capacity(vertices.len());
    for comp in comps {
        for layer in ws.layers(g, comp, comp[0]) {
            order.extend(layer);
        }
    }
    let mut in_prefix = vec![false; g.n()];
    for &v in &order[..cap] {
        in_prefix[v] = true;
    }
    let mut member = vec![false; g.n()];
    for &v in vertices {
        member[v] = true;
    }
    let mut boundary: Vec<usize> = order[cap..]
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|&w| member[w] && in_prefix[w]))
        .collect();
    boundary.sort_unstable();
    split_with(ws, g, vertices, &boundary, balance)
}

/// Moves separator vertices into a side whenever they touch only that side
/// and the side has room. Keeps the split valid.
fn shrink(g: &Graph, res: SeparatorResult, total: usize) -> SeparatorResult {
    let cap = res.balance.cap(total);
    let mut side = vec![0u8; g.n()];
    for &v in &res.separator {
        side[v] = 1;
    }
    for &v in &res.a {
        side[v] = 2;
    }
    for &v in &res.b {
        side[v] = 3;
    }
    let (mut na, mut nb) = (res.a.len(), res.b.len());
    let mut changed = true;
    while changed {
        changed = false;
        for &v in &res.separator {
            if side[v] != 1 {
                continue;
            }
            let touches_a = g.neighbors(v).iter().any(|&w| side[w] == 2);
            let touches_b = g.neighbors(v).iter().any(|&w| side[w] == 3);
            if !touches_b && na < cap && (touches_a || na <= nb) {
                side[v] = 2;
                na += 1;
                changed = true;
            } else if !touches_a && nb < cap {
                side[v] = 3;
                nb += 1;
                changed = true;
            }
        }
    }
    let pick = |label: u8| -> Vec<usize> {
        let mut out: Vec<usize> = res
            .separator
            .iter()
            .chain(&res.a)
            .chain(&res.b)
            .copied()
            .filter(|&v| side[v] == label)
            .collect();
        out.sort_unstable();
        out
    };
    SeparatorResult { separator: pick(1), a: pick(2), b: pick(3), balance: res.balance }
}
