use crate::chordal::is_chordal;
use crate::graph::Graph;

/// Three pairwise nonadjacent vertices, each pair joined by a path avoiding
/// the closed neighborhood of the third. Lexicographically first triple.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    let joined = |x: usize, y: usize, avoid: usize| {
        let rest = g.vertices().difference(g.closed_neighborhood(avoid));
        g.reach(x, rest).contains(y)
    };
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if joined(b, c, a) && joined(a, c, b) && joined(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Chordal and asteroidal-triple-free.
pub fn is_interval_like(g: &Graph) -> bool {
    is_chordal(g) && find_asteroidal_triple(g).is_none()
}
