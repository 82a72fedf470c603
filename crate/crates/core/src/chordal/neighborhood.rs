use crate::bits::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

/// `N[v]` is a clique.
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(g.is_clique(g.closed_neighborhood(v)))
}

/// The closed neighborhoods `{N[x] : x ∈ N[v]}` form a chain under inclusion.
pub fn is_simple(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(is_simple_within(g, v, g.vertices()))
}

/// [`is_simple`] in the subgraph induced by `alive` (which must contain `v`).
pub(crate) fn is_simple_within(g: &Graph, v: usize, alive: VertexSet) -> bool {
    let closed = |x: usize| g.closed_neighborhood(x).intersection(alive);
    let members = closed(v).to_vec();
    members.iter().enumerate().all(|(i, &x)| {
        members[i + 1..].iter().all(|&y| {
            let (a, b) = (closed(x), closed(y));
            a.is_subset(b) || b.is_subset(a)
        })
    })
}

/// Union of `N[w]` over `w ∈ N[v]`.
fn second_closed(g: &Graph, v: usize) -> VertexSet {
    g.closed_neighborhood(v).iter().fold(VertexSet::EMPTY, |acc, w| acc.union(g.closed_neighborhood(w)))
}

/// Some `u ∈ N[v]` with `N[w] ⊆ N[u]` for all `w ∈ N[v]`: `v` itself if it
/// qualifies, otherwise the least qualifying neighbor.
pub fn maximum_neighbor(g: &Graph, v: usize) -> Result<Option<usize>> {
    g.check_vertex(v)?;
    let reach = second_closed(g, v);
    let covers = |u: usize| reach.is_subset(g.closed_neighborhood(u));
    if covers(v) {
        return Ok(Some(v));
    }
    Ok(g.neighbors(v).iter().find(|&u| covers(u)))
}

/// Lexicographically least edge `uu'` with `u, u' ∈ N(v)` and
/// `N[w] ⊆ N[u] ∪ N[u']` for all `w ∈ N[v]`.
pub fn maximum_neighboring_edge(g: &Graph, v: usize) -> Result<Option<(usize, usize)>> {
    g.check_vertex(v)?;
    let reach = second_closed(g, v);
    let nb = g.neighbors(v);
    for u in nb {
        for w in nb.intersection(g.neighbors(u)).intersection(VertexSet::above(u)) {
            if reach.is_subset(g.closed_neighborhood(u).union(g.closed_neighborhood(w))) {
                return Ok(Some((u, w)));
            }
        }
    }
    Ok(None)
}
