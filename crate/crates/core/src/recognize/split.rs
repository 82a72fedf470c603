use serde::{Deserialize, Serialize};

use super::{ClassVerdict, Witness};
use crate::bits::VertexSet;
use crate::graph::Graph;

const BRUTE_FORCE_LIMIT: usize = 10;

/// An induced `C4`, `C5` (both in cycle order) or `2K2` (`[a, b, c, d]` with
/// edges `ab` and `cd`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitObstruction {
    C4(Vec<usize>),
    C5(Vec<usize>),
    TwoK2(Vec<usize>),
}

impl SplitObstruction {
    pub fn vertices(&self) -> &[usize] {
        match self {
            SplitObstruction::C4(v) | SplitObstruction::C5(v) | SplitObstruction::TwoK2(v) => v,
        }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set: VertexSet = vs.iter().copied().collect();
        if set.len() != vs.len() {
            return false;
        }
        match self {
            SplitObstruction::C4(c) | SplitObstruction::C5(c) => {
                let k = c.len();
                let want = if matches!(self, SplitObstruction::C4(_)) { 4 } else { 5 };
                k == want
                    && (0..k).all(|i| {
                        g.neighbors(c[i]).intersection(set)
                            == VertexSet::singleton(c[(i + 1) % k]).with(c[(i + k - 1) % k])
                    })
            }
            SplitObstruction::TwoK2(e) => {
                e.len() == 4
                    && g.neighbors(e[0]).intersection(set) == VertexSet::singleton(e[1])
                    && g.neighbors(e[2]).intersection(set) == VertexSet::singleton(e[3])
                    && g.neighbors(e[1]).intersection(set) == VertexSet::singleton(e[0])
                    && g.neighbors(e[3]).intersection(set) == VertexSet::singleton(e[2])
            }
        }
    }
}

fn cycle_order(g: &Graph, set: VertexSet) -> Vec<usize> {
    let start = set.first().expect("nonempty");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).intersection(set).iter().find(|&x| x != prev && x != start);
        match next {
            Some(x) if !order.contains(&x) => {
                order.push(x);
                prev = cur;
                cur = x;
            }
            _ => return order,
        }
    }
}

/// First induced `C4`, `2K2` (4-subsets) or `C5` (5-subsets) found.
pub fn find_split_obstruction(g: &Graph) -> Option<SplitObstruction> {
    let induced_degrees = |s: VertexSet| s.iter().map(move |v| g.neighbors(v).intersection(s).len());
    for s in g.vertices().subsets_of_size(4) {
        if induced_degrees(s).all(|d| d == 2) {
            return Some(SplitObstruction::C4(cycle_order(g, s)));
        }
        if induced_degrees(s).all(|d| d == 1) {
            let a = s.first().expect("four vertices");
            let b = g.neighbors(a).intersection(s).first().expect("degree one");
            let rest = s.without(a).without(b).to_vec();
            return Some(SplitObstruction::TwoK2(vec![a, b, rest[0], rest[1]]));
        }
    }
    for s in g.vertices().subsets_of_size(5) {
        if induced_degrees(s).all(|d| d == 2) {
            return Some(SplitObstruction::C5(cycle_order(g, s)));
        }
    }
    None
}

fn is_partition(g: &Graph, clique: VertexSet) -> bool {
    g.is_clique(clique) && g.is_independent(g.vertices().difference(clique))
}

/// A clique / independent set partition, if one exists.
///
/// Tries the degree-ordered greedy candidate first (the largest `m` with
/// `d_m >= m - 1` in nonincreasing degree order), then falls back to
/// checking every clique when `n <= 10`.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let m = (1..=g.n()).filter(|&i| g.degree(order[i - 1]) + 1 >= i).max().unwrap_or(0);
    let greedy: VertexSet = order[..m].iter().copied().collect();
    if is_partition(g, greedy) {
        return Some((greedy, g.vertices().difference(greedy)));
    }
    if g.n() <= BRUTE_FORCE_LIMIT {
        return g.vertices().subsets().find(|&q| is_partition(g, q)).map(|q| (q, g.vertices().difference(q)));
    }
    None
}

pub fn is_split(g: &Graph) -> ClassVerdict {
    match split_partition(g) {
        Some((clique, independent)) => {
            ClassVerdict { member: true, witness: Some(Witness::SplitPartition { clique, independent }) }
        }
        None => ClassVerdict { member: false, witness: find_split_obstruction(g).map(Witness::SplitObstruction) },
    }
}
