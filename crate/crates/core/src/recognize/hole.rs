use crate::bits::VertexSet;
use crate::graph::Graph;

/// Induced cycle of length at least 4, searched as chordless paths from each
/// start vertex through larger-numbered vertices.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if extend(g, &mut path, VertexSet::singleton(s), VertexSet::above(s)) {
            return Some(path);
        }
    }
    None
}

fn extend(g: &Graph, path: &mut Vec<usize>, on_path: VertexSet, allowed: VertexSet) -> bool {
    let start = path[0];
    let last = *path.last().expect("nonempty path");
    let ends = VertexSet::singleton(start).with(last);
    for x in g.neighbors(last).intersection(allowed).difference(on_path) {
        let touches = g.neighbors(x).intersection(on_path);
        if !touches.is_subset(ends) {
            continue;
        }
        if path.len() >= 2 && touches.contains(start) {
            if path.len() >= 3 {
                path.push(x);
                return true;
            }
            continue;
        }
        path.push(x);
        if extend(g, path, on_path.with(x), allowed) {
            return true;
        }
        path.pop();
    }
    false
}

pub(crate) fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let set: VertexSet = cycle.iter().copied().collect();
    if k < 4 || set.len() != k || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    (0..k).all(|i| {
        let prev = cycle[(i + k - 1) % k];
        let next = cycle[(i + 1) % k];
        g.neighbors(cycle[i]).intersection(set) == VertexSet::singleton(prev).with(next)
    })
}
