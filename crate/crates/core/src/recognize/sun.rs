use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An induced `k`-sun: `a` is a clique, `b` independent, and `b[j]` is
/// adjacent to exactly `a[j]` and `a[(j + 1) % k]` among `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sun {
    pub k: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Sun {
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.k;
        if k < 3 || self.a.len() != k || self.b.len() != k {
            return false;
        }
        let a: VertexSet = self.a.iter().copied().collect();
        let b: VertexSet = self.b.iter().copied().collect();
        if a.len() != k || b.len() != k || !a.is_disjoint(b) || !a.union(b).is_subset(g.vertices()) {
            return false;
        }
        g.is_clique(a)
            && g.is_independent(b)
            && (0..k).all(|j| {
                g.neighbors(self.b[j]).intersection(a) == VertexSet::singleton(self.a[j]).with(self.a[(j + 1) % k])
            })
    }
}

/// Searches `k = 3..=k_max` for an induced `k`-sun.
///
/// For each `k`-clique `A`, the candidate `b` vertices are those with exactly
/// two neighbors in `A`; a sun is a choice of pairwise nonadjacent candidates
/// whose neighbor pairs close a Hamiltonian cycle of `A`.
pub fn find_induced_sun(g: &Graph, k_max: usize) -> Result<Option<Sun>> {
    let max = g.n() / 2;
    if k_max < 3 || k_max > max {
        return Err(Error::ParameterOutOfRange { name: "k_max", value: k_max, min: 3, max });
    }
    for k in 3..=k_max {
        for a in g.vertices().subsets_of_size(k) {
            if !g.is_clique(a) {
                continue;
            }
            let candidates: Vec<(usize, VertexSet)> = g
                .vertices()
                .difference(a)
                .iter()
                .map(|x| (x, g.neighbors(x).intersection(a)))
                .filter(|(_, seen)| seen.len() == 2)
                .collect();
            if candidates.len() < k {
                continue;
            }
            let first = a.first().expect("k >= 3");
            let mut order = vec![first];
            let mut bs = Vec::with_capacity(k);
            if close_cycle(g, a, &candidates, &mut order, &mut bs) {
                return Ok(Some(Sun { k, a: order, b: bs }));
            }
        }
    }
    Ok(None)
}

/// Extends the cyclic order of `A` one vertex at a time, picking the `b`
/// between consecutive members.
fn close_cycle(
    g: &Graph,
    a: VertexSet,
    candidates: &[(usize, VertexSet)],
    order: &mut Vec<usize>,
    bs: &mut Vec<usize>,
) -> bool {
    let k = a.len();
    let cur = *order.last().expect("nonempty");
    let used_b: VertexSet = bs.iter().copied().collect();
    let placed: VertexSet = order.iter().copied().collect();
    let nexts: VertexSet = if order.len() == k { VertexSet::singleton(order[0]) } else { a.difference(placed) };
    for next in nexts {
        let want = VertexSet::singleton(cur).with(next);
        for &(x, _) in candidates.iter().filter(|(_, seen)| *seen == want) {
            if used_b.contains(x) || !g.neighbors(x).is_disjoint(used_b) {
                continue;
            }
            bs.push(x);
            if order.len() == k {
                return true;
            }
            order.push(next);
            if close_cycle(g, a, candidates, order, bs) {
                return true;
            }
            order.pop();
            bs.pop();
        }
    }
    false
}

/// No induced `k`-sun for any `k >= 3`.
pub fn is_sun_free(g: &Graph) -> bool {
    g.n() < 6 || find_induced_sun(g, g.n() / 2).expect("k_max in range").is_none()
}
