//! Vertex functions, the strict total order on vertices, and the
//! round-structured query oracle.
//!
//! Algorithms never read a [`ValueFunction`] directly: they submit batches
//! to a [`RoundOracle`], which answers a whole batch at once, charges one
//! round per batch and one query per batch entry, and records everything in
//! a [`Transcript`].

use std::cmp::Ordering;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::rng::seeded;
use crate::tree::SpanningTree;

/// A function value: exact integers for staircase functions, floats for
/// random ones.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Float(f64),
}

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(x) => x as f64,
            Value::Float(x) => x,
        }
    }

    /// Sign of the value: −1, 0 or +1.
    pub fn signum(self) -> i8 {
        match self {
            Value::Int(x) => x.signum() as i8,
            Value::Float(x) if x > 0.0 => 1,
            Value::Float(x) if x < 0.0 => -1,
            Value::Float(_) => 0,
        }
    }

    pub fn total_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => a.cmp(b),
            _ => self.as_f64().total_cmp(&other.as_f64()),
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        self.total_cmp(other) == Ordering::Equal
    }
}

impl Eq for Value {}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FunctionKind {
    Random { seed: u64 },
    Staircase { target: usize, root: usize },
    Custom,
}

/// A total map from vertices to values.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueFunction {
    values: Vec<Value>,
    kind: FunctionKind,
}

impl ValueFunction {
    pub fn custom(values: Vec<Value>) -> Self {
        Self { values, kind: FunctionKind::Custom }
    }

    pub fn from_ints(values: impl IntoIterator<Item = i64>) -> Self {
        Self::custom(values.into_iter().map(Value::Int).collect())
    }

    pub fn from_floats(values: impl IntoIterator<Item = f64>) -> Self {
        Self::custom(values.into_iter().map(Value::Float).collect())
    }

    /// I.i.d. uniform values in `[0, 1)` drawn from the stream keyed by `seed`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = seeded(seed);
        let values = (0..n).map(|_| Value::Float(rng.gen::<f64>())).collect();
        Self { values, kind: FunctionKind::Random { seed } }
    }

    /// Staircase function with target `z`: `−depth(x)` on the root path of
    /// `z`, `+depth(x)` everywhere else. Its only local minimum is `z`.
    pub fn staircase(tree: &SpanningTree, z: usize) -> Result<Self> {
        if z >= tree.n() {
            return Err(Error::InvalidVertex { vertex: z, n: tree.n() });
        }
        let values = (0..tree.n())
            .map(|x| {
                let d = tree.depth(x) as i64;
                Value::Int(if tree.is_ancestor(x, z) { -d } else { d })
            })
            .collect();
        Ok(Self { values, kind: FunctionKind::Staircase { target: z, root: tree.root() } })
    }

    /// Parses one value per line; integers stay exact.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split_whitespace()
            .map(|tok| {
                if let Ok(i) = tok.parse::<i64>() {
                    Ok(Value::Int(i))
                } else {
                    tok.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .map(Value::Float)
                        .ok_or_else(|| Error::Parse(format!("bad function value {tok:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::custom(values))
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn value(&self, v: usize) -> Value {
        self.values[v]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// `u ≺ v`: smaller value, ties broken by smaller id.
    pub fn order_less(&self, u: usize, v: usize) -> bool {
        order_less(&self.values, u, v)
    }

    /// Position of `v` in the order ≺, starting at 1.
    pub fn rank(&self, v: usize) -> usize {
        1 + (0..self.n()).filter(|&u| self.order_less(u, v)).count()
    }

    /// Ranks of all vertices at once, `O(n log n)`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| order_cmp(&self.values, a, b));
        let mut rank = vec![0; self.n()];
        for (pos, &v) in order.iter().enumerate() {
            rank[v] = pos + 1;
        }
        rank
    }

    pub fn is_local_minimum(&self, g: &Graph, v: usize) -> bool {
        graph::is_local_minimum(g, &self.values, v)
    }

    pub fn all_local_minima(&self, g: &Graph) -> Vec<usize> {
        graph::all_local_minima(g, &self.values)
    }
}

/// Comparison under ≺ for any indexable value table.
pub fn order_cmp<T: Ord>(values: &[T], u: usize, v: usize) -> Ordering {
    values[u].cmp(&values[v]).then(u.cmp(&v))
}

pub fn order_less<T: Ord>(values: &[T], u: usize, v: usize) -> bool {
    order_cmp(values, u, v) == Ordering::Less
}

/// The ≺-minimum of a set of `(vertex, value)` observations.
pub fn argmin_observed(observed: impl IntoIterator<Item = (usize, Value)>) -> Option<(usize, Value)> {
    observed
        .into_iter()
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub batch: Vec<usize>,
    pub answers: Vec<Value>,
}

/// Every batch submitted and every answer returned during one run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub rounds: Vec<RoundRecord>,
    #[serde(rename = "total")]
    pub total_queries: usize,
}

impl Transcript {
    pub fn rounds_used(&self) -> usize {
        self.rounds.len()
    }

    /// `total_queries` equals the summed batch lengths and answers align
    /// with their batches.
    pub fn is_consistent(&self) -> bool {
        self.rounds.iter().all(|r| r.batch.len() == r.answers.len())
            && self.total_queries == self.rounds.iter().map(|r| r.batch.len()).sum::<usize>()
    }

    /// All `(vertex, value)` observations in submission order.
    pub fn observations(&self) -> impl Iterator<Item = (usize, Value)> + '_ {
        self.rounds
            .iter()
            .flat_map(|r| r.batch.iter().copied().zip(r.answers.iter().copied()))
    }

    /// Per-vertex round index (0-based) of the first query, `None` if never queried.
    pub fn first_query_round(&self, n: usize) -> Vec<Option<usize>> {
        let mut first = vec![None; n];
        for (i, r) in self.rounds.iter().enumerate() {
            for &v in &r.batch {
                if first[v].is_none() {
                    first[v] = Some(i);
                }
            }
        }
        first
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("transcripts always serialize")
    }
}

/// The only channel through which algorithms observe `f`.
#[derive(Debug, Clone)]
pub struct RoundOracle<'f> {
    f: &'f ValueFunction,
    round_budget: usize,
    transcript: Transcript,
}

impl<'f> RoundOracle<'f> {
    pub fn new(f: &'f ValueFunction, round_budget: usize) -> Self {
        Self { f, round_budget, transcript: Transcript::default() }
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn round_budget(&self) -> usize {
        self.round_budget
    }

    pub fn rounds_used(&self) -> usize {
        self.transcript.rounds.len()
    }

    pub fn rounds_left(&self) -> usize {
        self.round_budget - self.rounds_used()
    }

    pub fn total_queries(&self) -> usize {
        self.transcript.total_queries
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    /// Submits one batch and returns its answers in batch order. Every entry
    /// is charged, duplicates included; an empty batch still uses a round.
    pub fn submit_batch(&mut self, batch: &[usize]) -> Result<Vec<Value>> {
        if self.rounds_used() >= self.round_budget {
            return Err(Error::RoundBudgetExceeded { budget: self.round_budget });
        }
        let n = self.f.n();
        if let Some(&bad) = batch.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidVertex { vertex: bad, n });
        }
        let answers: Vec<Value> = batch.iter().map(|&v| self.f.value(v)).collect();
        self.transcript.total_queries += batch.len();
        self.transcript.rounds.push(RoundRecord { batch: batch.to_vec(), answers: answers.clone() });
        Ok(answers)
    }

    pub fn into_transcript(self) -> Transcript {
        self.transcript
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, random_tree};

    #[test]
    fn order_basics() {
        let f = ValueFunction::from_ints([1, 2]);
        assert!(f.order_less(0, 1));
        assert!(!f.order_less(1, 0));
        let mut tied = vec![5i64; 8];
        tied[3] = 4;
        let f = ValueFunction::from_ints(tied);
        assert!(f.order_less(3, 7));
        let eq = ValueFunction::from_ints(vec![9; 8]);
        assert!(eq.order_less(3, 7));
        assert!(!eq.order_less(7, 3));
    }

    #[test]
    fn order_is_strict_total() {
        let f = ValueFunction::random(50, 3);
        for u in 0..50 {
            assert!(!f.order_less(u, u));
            for v in 0..50 {
                if u != v {
                    assert!(f.order_less(u, v) ^ f.order_less(v, u));
                }
            }
        }
    }

    #[test]
    fn ranks() {
        let f = ValueFunction::from_ints(vec![4; 6]);
        assert_eq!(f.ranks(), vec![1, 2, 3, 4, 5, 6]);
        let f = ValueFunction::random(20, 11);
        let ranks = f.ranks();
        let mut sorted: Vec<usize> = (0..20).collect();
        sorted.sort_by(|&a, &b| f.value(a).as_f64().partial_cmp(&f.value(b).as_f64()).unwrap());
        assert_eq!(ranks[sorted[0]], 1);
        for (i, &v) in sorted.iter().enumerate() {
            assert_eq!(ranks[v], i + 1);
            assert_eq!(f.rank(v), i + 1);
        }
    }

    #[test]
    fn random_function_determinism() {
        assert_eq!(ValueFunction::random(100, 5), ValueFunction::random(100, 5));
        assert_ne!(ValueFunction::random(1000, 5).values(), ValueFunction::random(1000, 6).values());
        let f = ValueFunction::random(1000, 5);
        let mut xs: Vec<f64> = f.values().iter().map(|v| v.as_f64()).collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        assert_eq!(xs.len(), 1000);
    }

    #[test]
    fn staircase_structure() {
        let g = random_tree(25, 8).unwrap();
        let t = SpanningTree::bfs(&g, 0).unwrap();
        for z in 0..25 {
            let f = ValueFunction::staircase(&t, z).unwrap();
            assert_eq!(f.value(0), Value::Int(0));
            let nonpos: Vec<usize> = (0..25).filter(|&x| f.value(x).signum() <= 0).collect();
            let mut anc = t.ancestors(z);
            anc.sort_unstable();
            assert_eq!(nonpos, anc);
            assert_eq!(f.all_local_minima(&g), vec![z]);
        }
        let root_target = ValueFunction::staircase(&t, 0).unwrap();
        assert!((1..25).all(|x| root_target.value(x) == Value::Int(t.depth(x) as i64)));
    }

    #[test]
    fn oracle_budget_and_accounting() {
        let f = ValueFunction::from_ints([10, 20, 30]);
        let mut o = RoundOracle::new(&f, 2);
        assert_eq!(o.submit_batch(&[1]).unwrap(), vec![Value::Int(20)]);
        assert_eq!(o.submit_batch(&[2, 2, 0]).unwrap(), vec![Value::Int(30), Value::Int(30), Value::Int(10)]);
        assert_eq!(o.total_queries(), 4);
        assert_eq!(o.submit_batch(&[0]), Err(Error::RoundBudgetExceeded { budget: 2 }));
        assert!(o.transcript().is_consistent());

        let mut o = RoundOracle::new(&f, 3);
        assert_eq!(o.submit_batch(&[]).unwrap(), vec![]);
        assert_eq!(o.rounds_used(), 1);
        assert_eq!(o.submit_batch(&[3]), Err(Error::InvalidVertex { vertex: 3, n: 3 }));
        assert_eq!(o.rounds_used(), 1);
    }

    #[test]
    fn transcript_json_shape() {
        let f = ValueFunction::from_ints([-1, 0, 1]);
        let mut o = RoundOracle::new(&f, 1);
        o.submit_batch(&[0, 2]).unwrap();
        assert_eq!(o.transcript().to_json(), r#"{"rounds":[{"batch":[0,2],"answers":[-1,1]}],"total":2}"#);
        let back: Transcript = serde_json::from_str(&o.transcript().to_json()).unwrap();
        assert_eq!(&back, o.transcript());
    }

    #[test]
    fn parse_values() {
        let f = ValueFunction::parse("3\n-1\n2.5\n").unwrap();
        assert_eq!(f.values(), &[Value::Int(3), Value::Int(-1), Value::Float(2.5)]);
        assert!(ValueFunction::parse("nan").is_err());
        let p = path(3).unwrap();
        assert!(f.is_local_minimum(&p, 1));
    }
}
