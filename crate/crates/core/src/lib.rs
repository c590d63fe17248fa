//! Local-minimum search on graphs under a round-limited batched query model.
//!
//! The crate provides graph construction and generators, balanced separators
//! and shattering, a query oracle that records every batch, the search
//! algorithms (vertex-cover two-round search, separator-based two- and
//! t-round search, parallel steepest descent with a warm start), the
//! staircase adversary used to evaluate deterministic algorithms, closed-form
//! bounds, and the experiment harness behind the `lsr` binary.

pub mod adversary;
pub mod algorithms;
pub mod bench;
pub mod bounds;
pub mod cover;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hierarchy;
pub mod oracle;
pub mod rng;
pub mod separator;
pub mod shatter;
pub mod tree;

pub use error::{Error, Result};
pub use graph::Graph;
pub use oracle::{RoundOracle, Transcript, Value, ValueFunction};
pub use separator::{Balance, SeparatorMode};
pub use tree::SpanningTree;
