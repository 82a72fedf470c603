use serde::{Deserialize, Serialize};

use super::exact::toughness;
use super::flow::disjoint_path_count;
use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ratio::{ExactRatio, ToughnessValue};

/// `τ(G)` of a connected, noncomplete graph, or the precondition error.
fn positive_toughness(g: &Graph) -> Result<ExactRatio> {
    match toughness(g) {
        ToughnessValue::Infinite => Err(Error::Complete),
        ToughnessValue::Finite(t) if t == ExactRatio::ZERO => Err(Error::NotConnected),
        ToughnessValue::Finite(t) => Ok(t),
    }
}

fn check_edge(g: &Graph, (u, v): (usize, usize)) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(u, v))
    }
}

/// The separator condition for edge `uv` at threshold `t`: every `S` that
/// disconnects `G` and separates `u` from `v` in `G - uv` has
/// `|S| >= t · (ω(G - S) + 1)`.
///
/// With `restricted`, only separators whose every vertex has neighbors in two
/// or more components of `(G - uv) - S` are quantified over.
fn separators_are_large(g: &Graph, (u, v): (usize, usize), t: ExactRatio, restricted: bool) -> bool {
    let without = g.without_edge(u, v);
    let candidates = g.vertices().without(u).without(v);
    for cut in candidates.subsets() {
        let parts = g.component_count(cut);
        if parts < 2 || !without.separates(cut, u, v) {
            continue;
        }
        if restricted && !every_vertex_sees_two_components(&without, cut) {
            continue;
        }
        if !t.le_scaled(parts as u64 + 1, cut.len() as u64) {
            return false;
        }
    }
    true
}

fn every_vertex_sees_two_components(g: &Graph, cut: VertexSet) -> bool {
    let comps = g.components(cut);
    cut.iter().all(|w| {
        let nb = g.neighbors(w);
        comps.iter().filter(|c| !c.is_disjoint(nb)).count() >= 2
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CharacterizationVerdict {
    /// An edge meeting both the path-count and the separator condition.
    SatisfyingEdge(usize, usize),
    NoEdge,
}

/// Searches for an edge `uv` with at least `2t + 1` internally disjoint `u`–`v`
/// paths (the edge included) whose separators are all large, `t = τ(G)`.
/// Such an edge exists exactly when `G` is not minimally tough.
pub fn check_non_minimality_characterization(g: &Graph) -> Result<CharacterizationVerdict> {
    let t = positive_toughness(g)?;
    for (u, v) in g.edges() {
        let paths = disjoint_path_count(g, u, v)? as u64;
        if t.two_t_plus_one_le(paths) && separators_are_large(g, (u, v), t, false) {
            return Ok(CharacterizationVerdict::SatisfyingEdge(u, v));
        }
    }
    Ok(CharacterizationVerdict::NoEdge)
}

/// Both forms of the separator condition for one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition2Check {
    pub unrestricted: bool,
    pub restricted: bool,
}

impl Condition2Check {
    pub fn agree(self) -> bool {
        self.unrestricted == self.restricted
    }
}

/// The unrestricted separator condition for `edge` at `t = τ(G)`.
pub fn check_condition2(g: &Graph, edge: (usize, usize)) -> Result<bool> {
    check_edge(g, edge)?;
    let t = positive_toughness(g)?;
    Ok(separators_are_large(g, edge, t, false))
}

pub fn check_condition2_restricted(g: &Graph, edge: (usize, usize)) -> Result<Condition2Check> {
    check_edge(g, edge)?;
    let t = positive_toughness(g)?;
    Ok(Condition2Check {
        unrestricted: separators_are_large(g, edge, t, false),
        restricted: separators_are_large(g, edge, t, true),
    })
}

/// An adjacent pair with at least `2t` common neighbors, at least `t` of which
/// have every neighbor inside `N(u) ∪ N(v)`. First such edge in lexicographic order.
pub fn check_sufficient_condition(g: &Graph, t: ExactRatio) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if !t.le_scaled(2, common.len() as u64) {
            return false;
        }
        let cover = g.neighbors(u).union(g.neighbors(v));
        let enclosed = common.iter().filter(|&w| g.neighbors(w).is_subset(cover)).count();
        t.le_scaled(1, enclosed as u64)
    })
}

/// A set `S = S(e)` certifying that deleting `e` lowers the toughness.
///
/// For a bridge `cut` is empty. Otherwise `u, v ∉ cut`, `uv` is a bridge of
/// `G - cut`, `ω(G - cut) <= |cut| / t < ω((G - e) - cut)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitnessSet {
    pub edge: (usize, usize),
    pub cut: VertexSet,
}

/// Searches `S ⊆ V - {u, v}` by increasing size for a witness set of `edge`.
pub fn find_edge_witness_set(g: &Graph, edge: (usize, usize)) -> Result<Option<EdgeWitnessSet>> {
    check_edge(g, edge)?;
    let t = positive_toughness(g)?;
    let (u, v) = edge;
    let without = g.without_edge(u, v);
    if without.separates(VertexSet::EMPTY, u, v) {
        return Ok(Some(EdgeWitnessSet { edge, cut: VertexSet::EMPTY }));
    }
    let candidates = g.vertices().without(u).without(v);
    for size in 1..=candidates.len() {
        for cut in candidates.subsets_of_size(size) {
            if !without.separates(cut, u, v) {
                continue;
            }
            let before = g.component_count(cut) as u64;
            let after = without.component_count(cut) as u64;
            let s = cut.len() as u64;
            if t.le_scaled(before, s) && !t.le_scaled(after, s) {
                return Ok(Some(EdgeWitnessSet { edge, cut }));
            }
        }
    }
    Ok(None)
}
