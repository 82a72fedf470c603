//! Brute-force oracles that avoid the library's own algorithms beyond the
//! adjacency representation.
#![allow(dead_code)]

use std::cmp::Ordering;

use toughlab_core::Graph;

/// Components of `G - removed` by plain flood fill over adjacency rows.
pub fn components(g: &Graph, removed: u64) -> usize {
    let n = g.n();
    let rows = g.rows();
    let mut seen = removed;
    let mut count = 0;
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen |= 1 << s;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if rows[x] >> y & 1 == 1 && seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Fraction `(num, den)`, compared by cross-multiplication.
#[derive(Clone, Copy, Debug)]
pub struct Frac(pub u64, pub u64);

impl Frac {
    pub fn reduced(self) -> (u64, u64) {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let d = gcd(self.0, self.1).max(1);
        (self.0 / d, self.1 / d)
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Frac {}
impl PartialOrd for Frac {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Frac {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.0 as u128 * o.1 as u128).cmp(&(o.0 as u128 * self.1 as u128))
    }
}

/// Toughness by scanning every vertex subset; `None` for complete graphs.
pub fn brute_toughness(g: &Graph) -> Option<Frac> {
    let n = g.n();
    let mut best: Option<Frac> = None;
    for s in 0u64..(1 << n) {
        let w = components(g, s);
        if w >= 2 {
            let r = Frac(s.count_ones() as u64, w as u64);
            if best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        }
    }
    best
}

/// Minimally tough with finite positive toughness, by recomputing `τ(G - e)`.
pub fn brute_minimally_tough(g: &Graph) -> Option<Frac> {
    let t = brute_toughness(g)?;
    if t.0 == 0 {
        return None;
    }
    let all_drop = g.edges().all(|(u, v)| brute_toughness(&g.without_edge(u, v)).is_some_and(|s| s < t));
    all_drop.then_some(t)
}

pub fn is_connected(g: &Graph) -> bool {
    components(g, 0) == 1
}

pub fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

/// Some clique / independent set partition, by trying every subset.
pub fn brute_split(g: &Graph) -> bool {
    let n = g.n();
    let rows = g.rows();
    (0u64..(1 << n)).any(|q| {
        (0..n).all(|x| {
            (0..n).all(|y| {
                x == y || {
                    let adj = rows[x] >> y & 1 == 1;
                    match (q >> x & 1 == 1, q >> y & 1 == 1) {
                        (true, true) => adj,
                        (false, false) => !adj,
                        _ => true,
                    }
                }
            })
        })
    })
}

pub const CONNECTED_COUNTS: [usize; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];
pub const GRAPH_COUNTS: [usize; 9] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668];
pub const CONNECTED_CHORDAL_COUNTS: [usize; 9] = [1, 1, 2, 5, 15, 58, 272, 1614, 11911];
pub const CHORDAL_COUNTS: [usize; 9] = [1, 2, 4, 10, 27, 94, 393, 2119, 14524];
