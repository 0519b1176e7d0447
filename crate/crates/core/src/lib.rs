//! Constructive tools for Ramsey goodness of sparse graphs.
//!
//! The crate is organised around a handful of layers:
//!
//! - [`graph`], [`graph6`], [`structure`] and [`multigraph`]: bitset graphs,
//!   serialization and the degree-based structure queries (leaves, end-edges,
//!   suspended paths).
//! - [`trichotomy`]: the sparse-graph trichotomy decomposition with
//!   machine-checkable certificates and a replayable contraction trace.
//! - [`colorings`]: red/blue colorings of complete graphs, the extremal
//!   lower-bound coloring and color-constrained subgraph search.
//! - [`arrows`]: exact decision of `K_N -> (G, tK_m)` and exact Ramsey
//!   numbers at desk scale.
//! - [`bounds`]: closed-form values and bounds in exact arithmetic.
//! - [`lemmas`]: witness finders for path extension, Hall-type dichotomy and
//!   complement cliques.
//! - [`canon`] and [`enumerate`]: small-graph canonical forms and
//!   isomorphism-free generation used by the corpus runners.

pub mod arrows;
pub mod bounds;
pub mod canon;
pub mod colorings;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod multigraph;
pub mod structure;
pub mod trichotomy;

mod bits;
mod embed;

pub use graph::{GraphError, SimpleGraph};
pub use multigraph::MultiGraph;
