//! Exact solvers and instance generators for edge deletion on edge-colored
//! graphs.
//!
//! Given a graph whose edges carry colors, the task is to delete at most `k`
//! edges so that no induced path or cycle on ℓ vertices using exactly `c`
//! distinct colors remains.
//!
//! ```
//! use ecdel::graph::parse_graph;
//! use ecdel::pattern::PatternSpec;
//! use ecdel::solve::brute_force;
//!
//! // alternating blue/red 4-cycle
//! let g = parse_graph("p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2").unwrap();
//! let best = brute_force(&g, &PatternSpec::cycle(4, 2)).unwrap();
//! assert_eq!(best.len(), 1);
//! ```

pub mod bench;
pub mod classify;
pub mod error;
pub mod generate;
pub mod graph;
pub mod pattern;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{Color, ColoredEdge, ColoredGraph, DeletionSet, Edge};
pub use pattern::{Mode, Occurrence, PatternKind, PatternSpec};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/cascading.md")]
    mod cascading {}
    #[doc = include_str!("../../../book/src/neighborhood-classes.md")]
    mod neighborhood_classes {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/double-cluster.md")]
    mod double_cluster {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
}
