//! Nested shattering used by the t-round separator algorithm.
//!
//! Level 1 shatters the whole graph with threshold `K_1`, producing the top
//! separator `S_1` and the level-1 components. Each level-`(i−1)` component
//! is then shattered with `K_i`, giving its separator `σ_i(C)` and its
//! level-`i` children, for `i = 2..t−1`. A vertex has level `i` when it lies
//! in a level-`i` separator and level `t` when it lies in a final component.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separator::SeparatorMode;
use crate::shatter::{shatter, shatter_subset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub id: usize,
    /// Level in `1..t`; level `t−1` components are final.
    pub level: usize,
    pub parent: Option<usize>,
    pub vertices: Vec<usize>,
    /// `σ_{level+1}` for non-final components, empty for final ones.
    pub separator: Vec<usize>,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorHierarchy {
    pub t: usize,
    pub k: Vec<usize>,
    pub top_separator: Vec<usize>,
    pub components: Vec<Component>,
    pub level_of: Vec<usize>,
    /// `membership[i−1][v]`: id of the level-`i` component containing `v`.
    #[serde(skip)]
    membership: Vec<Vec<Option<usize>>>,
}

impl SeparatorHierarchy {
    /// Builds the hierarchy for `t = k.len() + 1` rounds.
    pub fn build(g: &Graph, k: &[usize], mode: SeparatorMode) -> Result<Self> {
        let n = g.n();
        if k.is_empty() {
            return Err(Error::InvalidParameter("need at least one shatter threshold".into()));
        }
        if k.iter().any(|&ki| ki == 0 || ki > n) || k.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::InvalidParameter(format!(
                "thresholds {k:?} must be nonincreasing within [1, {n}]"
            )));
        }
        let t = k.len() + 1;
        let top = shatter(g, k[0], mode)?;
        let mut level_of = vec![t; n];
        for &v in &top.separator {
            level_of[v] = 1;
        }
        let mut components: Vec<Component> = top
            .components
            .into_iter()
            .enumerate()
            .map(|(id, vertices)| Component {
                id,
                level: 1,
                parent: None,
                vertices,
                separator: Vec::new(),
                children: Vec::new(),
            })
            .collect();

        let mut frontier: Vec<usize> = (0..components.len()).collect();
        for (i, &ki) in k.iter().enumerate().skip(1) {
            let level = i + 1;
            let splits: Vec<_> = frontier
                .par_iter()
                .map(|&c| shatter_subset(g, &components[c].vertices, ki, mode))
                .collect::<Result<_>>()?;
            let mut next = Vec::new();
            for (&c, split) in frontier.iter().zip(splits) {
                for &v in &split.separator {
                    level_of[v] = level;
                }
                components[c].separator = split.separator;
                for vertices in split.components {
                    let id = components.len();
                    components.push(Component {
                        id,
                        level,
                        parent: Some(c),
                        vertices,
                        separator: Vec::new(),
                        children: Vec::new(),
                    });
                    components[c].children.push(id);
                    next.push(id);
                }
            }
            frontier = next;
        }

        let mut membership = vec![vec![None; n]; t - 1];
        for comp in &components {
            for &v in &comp.vertices {
                membership[comp.level - 1][v] = Some(comp.id);
            }
        }
        Ok(Self { t, k: k.to_vec(), top_separator: top.separator, components, level_of, membership })
    }

    pub fn component(&self, id: usize) -> &Component {
        &self.components[id]
    }

    /// Ids of the components at `level`, in creation order.
    pub fn components_at(&self, level: usize) -> impl Iterator<Item = usize> + '_ {
        self.components.iter().filter(move |c| c.level == level).map(|c| c.id)
    }

    /// The level-`level` component containing `v`, if `v` is not in a
    /// separator at or above that level.
    pub fn component_of(&self, v: usize, level: usize) -> Option<usize> {
        self.membership.get(level.checked_sub(1)?)?.get(v).copied().flatten()
    }

    pub fn final_components(&self) -> impl Iterator<Item = usize> + '_ {
        self.components_at(self.t - 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("hierarchy serializes")
    }

    /// Checks the structural invariants against `g`, returning a description
    /// of the first violation.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        // every vertex is in exactly one separator or final component
        let mut owner = vec![0usize; n];
        for &v in &self.top_separator {
            owner[v] += 1;
        }
        for c in &self.components {
            for &v in &c.separator {
                owner[v] += 1;
            }
            if c.level == self.t - 1 {
                for &v in &c.vertices {
                    owner[v] += 1;
                }
                if c.vertices.len() > self.k[self.t - 2] {
                    return Err(format!("final component {} exceeds K", c.id));
                }
            }
        }
        if let Some(v) = owner.iter().position(|&k| k != 1) {
            return Err(format!("vertex {v} covered {} times", owner[v]));
        }
        for c in &self.components {
            if c.vertices.len() > self.k[c.level - 1] {
                return Err(format!("component {} larger than K_{}", c.id, c.level));
            }
            let expected_parent_size = match c.parent {
                Some(p) => self.components[p].vertices.len(),
                None => n,
            };
            if c.vertices.len() > expected_parent_size {
                return Err(format!("component {} larger than its parent", c.id));
            }
        }
        // same-level components never touch
        for level in 1..self.t {
            for c in self.components_at(level) {
                for &v in &self.components[c].vertices {
                    for &w in g.neighbors(v) {
                        if let Some(other) = self.component_of(w, level) {
                            if other != c {
                                return Err(format!("components {c} and {other} share edge ({v},{w})"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
