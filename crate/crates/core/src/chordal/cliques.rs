use crate::bits::VertexSet;
use crate::graph::Graph;

/// All maximal cliques, ascending by bitmask. Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}

fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(g.neighbors(u)).len()).expect("p is nonempty");
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p = p.without(v);
        x = x.with(v);
    }
}
