use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cliques::maximal_cliques;
use super::peo::is_chordal;
use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree on the maximal cliques in which, for every vertex, the cliques
/// containing it form a subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    /// Index pairs `(i, j)` with `i < j`.
    pub tree_edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.tree_edges.iter().filter_map(move |&(a, b)| {
            if a == node {
                Some(b)
            } else if b == node {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.cliques.len()).filter(|&i| self.neighbors(i).count() <= 1).collect()
    }

    /// Path of node indices from `from` to `to`.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let k = self.cliques.len();
        let mut prev = vec![usize::MAX; k];
        prev[from] = from;
        let mut stack = vec![from];
        while let Some(a) = stack.pop() {
            for b in self.neighbors(a) {
                if prev[b] == usize::MAX {
                    prev[b] = a;
                    stack.push(b);
                }
            }
        }
        let mut out = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            out.push(cur);
        }
        out.reverse();
        out
    }

    /// Checks the node set, the tree shape, and the induced-subtree property.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCliqueTree(msg));
        let want: BTreeSet<_> = maximal_cliques(g).into_iter().collect();
        let have: BTreeSet<_> = self.cliques.iter().copied().collect();
        if have.len() != self.cliques.len() {
            return bad("a clique is listed twice".into());
        }
        if have != want {
            return bad("nodes are not exactly the maximal cliques".into());
        }
        let k = self.cliques.len();
        if self.tree_edges.len() + 1 != k {
            return bad(format!("{} edges for {} nodes", self.tree_edges.len(), k));
        }
        if self.tree_edges.iter().any(|&(a, b)| a >= k || b >= k || a == b) {
            return bad("edge endpoint out of range".into());
        }
        let all = VertexSet::full(k);
        if self.reachable(0, all) != all {
            return bad("tree is disconnected".into());
        }
        for v in g.vertices() {
            let holding: VertexSet = (0..k).filter(|&i| self.cliques[i].contains(v)).collect();
            let start = holding.first().expect("every vertex lies in a maximal clique");
            if self.reachable(start, holding) != holding {
                return bad(format!("cliques containing vertex {v} are not a subtree"));
            }
        }
        Ok(())
    }

    fn reachable(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for b in self.neighbors(a) {
                if within.contains(b) && !seen.contains(b) {
                    seen = seen.with(b);
                    stack.push(b);
                }
            }
        }
        seen
    }

    fn weight(&self) -> usize {
        self.tree_edges.iter().map(|&(a, b)| self.cliques[a].intersection(self.cliques[b]).len()).sum()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn intersection_edges(cliques: &[VertexSet]) -> Vec<(usize, usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let w = cliques[i].intersection(cliques[j]).len();
            if w > 0 {
                edges.push((w, i, j));
            }
        }
    }
    // heaviest first; lexicographic on (i, j) among equal weights
    edges.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    edges
}

fn check_input(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    Ok(())
}

/// Maximum-weight spanning tree (Kruskal) of the clique intersection graph,
/// edge weight `|Q ∩ Q'|`.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    check_input(g)?;
    let cliques = maximal_cliques(g);
    let mut parent: Vec<usize> = (0..cliques.len()).collect();
    let mut tree_edges = Vec::new();
    for (_, i, j) in intersection_edges(&cliques) {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            tree_edges.push((i, j));
        }
    }
    Ok(CliqueTree { cliques, tree_edges })
}

/// Every maximum-weight spanning tree of the clique intersection graph, which
/// are exactly the clique trees of a connected chordal graph.
pub fn clique_trees(g: &Graph) -> Result<Vec<CliqueTree>> {
    let first = clique_tree(g)?;
    let target = first.weight();
    let cliques = first.cliques;
    let edges = intersection_edges(&cliques);
    let k = cliques.len();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    choose(&edges, 0, &mut chosen, &mut (0..k).collect(), k - 1, target, &cliques, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn choose(
    edges: &[(usize, usize, usize)],
    at: usize,
    chosen: &mut Vec<(usize, usize)>,
    label: &mut Vec<usize>,
    need: usize,
    target: usize,
    cliques: &[VertexSet],
    out: &mut Vec<CliqueTree>,
) {
    if chosen.len() == need {
        let t = CliqueTree { cliques: cliques.to_vec(), tree_edges: chosen.clone() };
        if t.weight() == target {
            out.push(t);
        }
        return;
    }
    if edges.len() - at < need - chosen.len() {
        return;
    }
    let (_, i, j) = edges[at];
    if label[i] != label[j] {
        let saved = label.clone();
        let (from, to) = (label[i], label[j]);
        for l in label.iter_mut() {
            if *l == from {
                *l = to;
            }
        }
        chosen.push((i, j));
        choose(edges, at + 1, chosen, label, need, target, cliques, out);
        chosen.pop();
        *label = saved;
    }
    choose(edges, at + 1, chosen, label, need, target, cliques, out);
}

/// `{Q ∩ Q' : QQ' a tree edge}`, deduplicated, ascending by bitmask.
pub fn minimal_separators_via_clique_tree(g: &Graph, tree: &CliqueTree) -> Result<Vec<VertexSet>> {
    check_input(g)?;
    tree.validate(g)?;
    let seps: BTreeSet<_> =
        tree.tree_edges.iter().map(|&(a, b)| tree.cliques[a].intersection(tree.cliques[b])).collect();
    Ok(seps.into_iter().collect())
}
