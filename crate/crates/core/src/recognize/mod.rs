//! Class membership tests with re-checkable witnesses.

mod asteroidal;
mod hole;
mod split;
mod strong;
mod sun;

use serde::{Deserialize, Serialize};

pub use asteroidal::{find_asteroidal_triple, is_interval_like};
pub use hole::find_hole;
pub use split::{find_split_obstruction, is_split, split_partition, SplitObstruction};
pub use strong::{is_strongly_chordal, simple_elimination_is_order_independent, simple_elimination_ordering};
pub use sun::{find_induced_sun, is_sun_free, Sun};

use crate::bits::VertexSet;
use crate::graph::Graph;

/// Evidence attached to a [`ClassVerdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// An induced cycle of length at least 4, in cycle order.
    Hole(Vec<usize>),
    Sun(Sun),
    SplitObstruction(SplitObstruction),
    /// A clique / independent set partition of `V`.
    SplitPartition {
        clique: VertexSet,
        independent: VertexSet,
    },
    /// Each vertex is simple in the subgraph induced by itself and its successors.
    SimpleEliminationOrdering(Vec<usize>),
}

impl Witness {
    /// Re-checks the witness against the adjacency of `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Witness::Hole(cycle) => hole::is_hole(g, cycle),
            Witness::Sun(s) => s.verify(g),
            Witness::SplitObstruction(o) => o.verify(g),
            Witness::SplitPartition { clique, independent } => {
                clique.is_disjoint(*independent)
                    && clique.union(*independent) == g.vertices()
                    && g.is_clique(*clique)
                    && g.is_independent(*independent)
            }
            Witness::SimpleEliminationOrdering(order) => strong::is_simple_elimination_ordering(g, order),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub member: bool,
    pub witness: Option<Witness>,
}

/// `{v : d(v) = n - 1}`.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    g.vertices().iter().filter(|&v| g.degree(v) == n - 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, wheel};

    #[test]
    fn universal_examples() {
        assert_eq!(universal_vertices(&wheel(6).unwrap()), VertexSet::singleton(0));
        assert_eq!(universal_vertices(&cycle(5).unwrap()), VertexSet::EMPTY);
        assert_eq!(universal_vertices(&complete(4).unwrap()), VertexSet::full(4));
    }
}
