use std::collections::HashMap;

use super::hole::find_hole;
use super::sun::find_induced_sun;
use super::{ClassVerdict, Witness};
use crate::bits::VertexSet;
use crate::chordal::is_simple_within;
use crate::graph::Graph;

/// Greedy simple-vertex elimination: repeatedly delete the least vertex that
/// is simple in what remains. Returns the full ordering, or `None` if it gets
/// stuck.
pub fn simple_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = alive.iter().find(|&v| is_simple_within(g, v, alive))?;
        order.push(v);
        alive = alive.without(v);
    }
    Some(order)
}

pub(crate) fn is_simple_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() || order.iter().copied().collect::<VertexSet>() != g.vertices() {
        return false;
    }
    let mut alive = g.vertices();
    order.iter().all(|&v| {
        let ok = is_simple_within(g, v, alive);
        alive = alive.without(v);
        ok
    })
}

/// Strongly chordal by greedy simple elimination. A non-member gets a hole
/// when it is not chordal and an induced sun otherwise.
pub fn is_strongly_chordal(g: &Graph) -> ClassVerdict {
    if let Some(order) = simple_elimination_ordering(g) {
        return ClassVerdict { member: true, witness: Some(Witness::SimpleEliminationOrdering(order)) };
    }
    let witness = match find_hole(g) {
        Some(h) => Some(Witness::Hole(h)),
        None if g.n() >= 6 => find_induced_sun(g, g.n() / 2).expect("k_max in range").map(Witness::Sun),
        None => None,
    };
    ClassVerdict { member: false, witness }
}

/// Whether every sequence of simple-vertex deletions reaches the same outcome
/// (all empty the graph, or none does).
pub fn simple_elimination_is_order_independent(g: &Graph) -> bool {
    fn outcomes(g: &Graph, alive: VertexSet, memo: &mut HashMap<VertexSet, (bool, bool)>) -> (bool, bool) {
        if alive.is_empty() {
            return (true, false);
        }
        if let Some(&r) = memo.get(&alive) {
            return r;
        }
        let mut any_success = false;
        let mut any_stuck = false;
        let mut moved = false;
        for v in alive {
            if is_simple_within(g, v, alive) {
                moved = true;
                let (s, f) = outcomes(g, alive.without(v), memo);
                any_success |= s;
                any_stuck |= f;
            }
        }
        if !moved {
            any_stuck = true;
        }
        memo.insert(alive, (any_success, any_stuck));
        (any_success, any_stuck)
    }
    let (s, f) = outcomes(g, g.vertices(), &mut HashMap::new());
    !(s && f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, k_sun, path};

    #[test]
    fn examples() {
        let sun = k_sun(3).unwrap();
        let v = is_strongly_chordal(&sun);
        assert!(!v.member);
        assert!(matches!(&v.witness, Some(Witness::Sun(s)) if s.k == 3));
        assert!(v.witness.unwrap().verify(&sun));

        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let v = is_strongly_chordal(&tree);
        assert!(v.member);
        assert!(v.witness.unwrap().verify(&tree));

        let c5 = cycle(5).unwrap();
        let v = is_strongly_chordal(&c5);
        assert!(!v.member);
        assert!(matches!(v.witness, Some(Witness::Hole(_))));
        assert!(is_strongly_chordal(&path(5).unwrap()).member);
    }

    #[test]
    fn order_independent_on_small_graphs() {
        for n in 1..=6 {
            crate::enumerate::enumerate_graphs(
                n,
                crate::enumerate::GraphClass::All,
                |_| true,
                |g| {
                    assert!(simple_elimination_is_order_independent(g), "{g:?}");
                },
            )
            .unwrap();
        }
    }
}
