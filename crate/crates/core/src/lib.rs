//! Exact toughness and minimal toughness of small graphs, together with the
//! chordal-graph toolkit (clique trees, minimal separators, moplexes, simple
//! vertices), class recognizers, named families and an exhaustive verifier.
//!
//! Graphs are bitset-backed and limited to 64 vertices; the exhaustive parts
//! (toughness, enumeration, verification) are meant for ten vertices or so.

pub mod bits;
pub mod canon;
pub mod chordal;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod ratio;
pub mod recognize;
pub mod toughness;
pub mod verify;

pub use bits::VertexSet;
pub use canon::{canonical_form, canonical_key, CanonKey};
pub use enumerate::{enumerate_graphs, par_enumerate_graphs, GraphClass};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use ratio::{ExactRatio, ToughnessValue};
