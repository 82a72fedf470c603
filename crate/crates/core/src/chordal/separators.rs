use crate::bits::VertexSet;
use crate::graph::Graph;

/// `S` is a minimal separator iff `G - S` has at least two `S`-full components,
/// i.e. components in which every vertex of `S` has a neighbor.
pub fn is_minimal_separator(g: &Graph, s: VertexSet) -> bool {
    if !s.is_subset(g.vertices()) || s == g.vertices() {
        return false;
    }
    g.components(s).into_iter().filter(|&c| s.is_subset(g.neighborhood_of(c))).take(2).count() == 2
}

/// Every minimal separator, by testing each subset of `V`. Ascending by bitmask.
pub fn minimal_separators(g: &Graph) -> Vec<VertexSet> {
    g.vertices().subsets().filter(|&s| is_minimal_separator(g, s)).collect()
}
