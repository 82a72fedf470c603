//! Elimination orderings, maximal cliques, clique trees, minimal separators,
//! moplexes, and the closed-neighborhood vertex predicates.

mod cliques;
mod moplex;
mod neighborhood;
mod peo;
mod separators;
mod tree;

pub use cliques::maximal_cliques;
pub use moplex::{is_moplicial, moplexes, Moplex};
pub(crate) use neighborhood::is_simple_within;
pub use neighborhood::{is_simple, is_simplicial, maximum_neighbor, maximum_neighboring_edge};
pub use peo::{is_chordal, is_perfect_elimination_ordering, maximum_cardinality_search, peo};
pub use separators::{is_minimal_separator, minimal_separators};
pub use tree::{clique_tree, clique_trees, minimal_separators_via_clique_tree, CliqueTree};
