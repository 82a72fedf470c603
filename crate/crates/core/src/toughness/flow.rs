use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maximum number of internally vertex-disjoint `u`–`v` paths, counting the
/// edge `uv` itself when present.
///
/// Unit-capacity max-flow on the vertex-split digraph: every vertex `x` other
/// than `u` and `v` becomes `x_in -> x_out` with capacity one.
pub fn disjoint_path_count(g: &Graph, u: usize, v: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let direct = g.has_edge(u, v) as usize;
    let h = if direct == 1 { g.without_edge(u, v) } else { g.clone() };
    Ok(direct + internally_disjoint(&h, u, v))
}

fn internally_disjoint(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let nodes = 2 * n;
    let inn = |x: usize| 2 * x;
    let out = |x: usize| 2 * x + 1;
    let mut cap = vec![0u8; nodes * nodes];
    for x in 0..n {
        cap[inn(x) * nodes + out(x)] = if x == s || x == t { 2 } else { 1 };
        for y in g.neighbors(x) {
            cap[out(x) * nodes + inn(y)] = 1;
        }
    }
    let (source, sink) = (out(s), inn(t));
    let mut flow = 0;
    let mut prev = vec![usize::MAX; nodes];
    loop {
        prev.fill(usize::MAX);
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..nodes {
                if prev[b] == usize::MAX && cap[a * nodes + b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap[a * nodes + b] -= 1;
            cap[b * nodes + a] += 1;
            b = a;
        }
        flow += 1;
    }
}

/// Vertex connectivity: the minimum of [`disjoint_path_count`] over nonadjacent
/// pairs, or `n - 1` for complete graphs.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(internally_disjoint(g, u, v));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::VertexSet;
    use crate::families::{complete, cycle, wheel};

    /// Menger: smallest `u`–`v` separator in `G - uv`, plus one for the edge.
    fn brute(g: &Graph, u: usize, v: usize) -> usize {
        let direct = g.has_edge(u, v) as usize;
        let h = g.without_edge(u, v);
        let others = g.vertices().without(u).without(v);
        let sep = others.subsets().filter(|&s| h.separates(s, u, v)).map(VertexSet::len).min().unwrap_or(others.len());
        direct + sep
    }

    #[test]
    fn examples() {
        assert_eq!(disjoint_path_count(&complete(4).unwrap(), 0, 1).unwrap(), 3);
        assert_eq!(disjoint_path_count(&cycle(4).unwrap(), 0, 1).unwrap(), 2);
        assert_eq!(disjoint_path_count(&wheel(5).unwrap(), 0, 1).unwrap(), 3);
        assert_eq!(disjoint_path_count(&cycle(4).unwrap(), 0, 0), Err(Error::SameVertex(0)));
        assert!(disjoint_path_count(&cycle(4).unwrap(), 0, 4).is_err());
    }

    #[test]
    fn agrees_with_menger_oracle() {
        for n in 2..=6 {
            crate::enumerate::enumerate_graphs(
                n,
                crate::enumerate::GraphClass::All,
                |_| true,
                |g| {
                    for u in 0..n {
                        for v in u + 1..n {
                            assert_eq!(disjoint_path_count(g, u, v).unwrap(), brute(g, u, v), "{g:?} {u} {v}");
                        }
                    }
                },
            )
            .unwrap();
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(connectivity(&cycle(6).unwrap()), 2);
        assert_eq!(connectivity(&wheel(6).unwrap()), 3);
        assert_eq!(connectivity(&complete(5).unwrap()), 4);
        assert_eq!(connectivity(&Graph::from_edges(3, &[(0, 1)]).unwrap()), 0);
    }
}
