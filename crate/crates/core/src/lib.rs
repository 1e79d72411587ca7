//! Regular Turán numbers for cliques and trees.
//!
//! `regex(n, F)` is the largest `d` such that some `d`-regular graph on `n`
//! vertices avoids `F` as a subgraph, and `rex(n, F) = n·regex(n, F)/2`.
//! The crate provides the closed forms ([`formulas`]), explicit witness
//! constructions with machine-checked certificates ([`constructions`]),
//! and an exhaustive search oracle for small `n` ([`oracle`]).

pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod patterns;
pub mod trees;

pub use error::{Error, Result};
pub use graph::{Graph, PartSpec};
pub use patterns::Forbidden;
pub use trees::Tree;
