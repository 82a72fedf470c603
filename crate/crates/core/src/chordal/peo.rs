use crate::bits::VertexSet;
use crate::graph::Graph;

/// Maximum cardinality search visit order: each step takes the unvisited
/// vertex with the most visited neighbors, lowest index on ties.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited = visited.with(v);
        order.push(v);
        for w in g.neighbors(v).difference(visited) {
            weight[w] += 1;
        }
    }
    order
}

/// Whether every vertex is simplicial among itself and the vertices after it.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() || order.iter().copied().collect::<VertexSet>() != g.vertices() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        later = later.without(v);
        if !g.is_clique(g.neighbors(v).intersection(later)) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering (reversed MCS order, verified), or `None`
/// when `g` is not chordal.
pub fn peo(g: &Graph) -> Option<Vec<usize>> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    peo(g).is_some()
}
