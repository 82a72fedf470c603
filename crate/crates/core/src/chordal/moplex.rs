use serde::{Deserialize, Serialize};

use super::separators::is_minimal_separator;
use crate::bits::VertexSet;
use crate::graph::Graph;

/// An inclusion-maximal clique module whose open neighborhood is empty or a
/// minimal separator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Moplex {
    pub members: VertexSet,
}

impl Moplex {
    pub fn neighborhood(&self, g: &Graph) -> VertexSet {
        g.neighborhood_of(self.members)
    }
}

/// True-twin classes (equal closed neighborhoods) are exactly the maximal
/// clique modules; keep those whose neighborhood is empty or passes the
/// `S`-full test. Ordered by least member.
pub fn moplexes(g: &Graph) -> Vec<Moplex> {
    let mut out = Vec::new();
    let mut left = g.vertices();
    while let Some(v) = left.first() {
        let closed = g.closed_neighborhood(v);
        let class: VertexSet = left.iter().filter(|&w| g.closed_neighborhood(w) == closed).collect();
        left = left.difference(class);
        let nb = g.neighborhood_of(class);
        if nb.is_empty() || is_minimal_separator(g, nb) {
            out.push(Moplex { members: class });
        }
    }
    out
}

pub fn is_moplicial(g: &Graph, v: usize) -> bool {
    moplexes(g).iter().any(|m| m.members.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};

    fn is_module(g: &Graph, m: VertexSet) -> bool {
        g.vertices().difference(m).iter().all(|x| {
            let seen = g.neighbors(x).intersection(m);
            seen.is_empty() || seen == m
        })
    }

    #[test]
    fn examples() {
        let m: Vec<_> = moplexes(&path(4).unwrap()).into_iter().map(|m| m.members).collect();
        assert_eq!(m, vec![VertexSet::singleton(0), VertexSet::singleton(3)]);
        let k3 = moplexes(&complete(3).unwrap());
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[0].members, VertexSet::full(3));
        assert!(k3[0].neighborhood(&complete(3).unwrap()).is_empty());
        assert!(!is_moplicial(&path(4).unwrap(), 1));
    }

    /// Maximal clique modules straight from the definition, for small graphs.
    fn maximal_clique_modules(g: &Graph) -> Vec<VertexSet> {
        let cm: Vec<_> =
            g.vertices().subsets().filter(|&s| !s.is_empty() && g.is_clique(s) && is_module(g, s)).collect();
        cm.iter().copied().filter(|&s| !cm.iter().any(|&t| t != s && s.is_subset(t))).collect()
    }

    #[test]
    fn twin_classes_are_maximal_clique_modules() {
        for n in 1..=6 {
            crate::enumerate::enumerate_graphs(
                n,
                crate::enumerate::GraphClass::All,
                |_| true,
                |g| {
                    let mut want: Vec<_> = maximal_clique_modules(g)
                        .into_iter()
                        .filter(|&s| {
                            let nb = g.neighborhood_of(s);
                            nb.is_empty() || is_minimal_separator(g, nb)
                        })
                        .collect();
                    want.sort_by_key(|s| s.first());
                    let got: Vec<_> = moplexes(g).into_iter().map(|m| m.members).collect();
                    assert_eq!(got, want, "{g:?}");
                    for (i, a) in got.iter().enumerate() {
                        assert!(got[i + 1..].iter().all(|b| a.is_disjoint(*b)));
                    }
                },
            )
            .unwrap();
        }
    }
}
