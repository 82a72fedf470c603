use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::graph::Graph;
use crate::ratio::{ExactRatio, ToughnessValue};

/// A cut attaining the toughness: `value = |cut| / parts`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessWitness {
    pub cut: VertexSet,
    pub parts: usize,
    pub value: ExactRatio,
}

pub fn toughness(g: &Graph) -> ToughnessValue {
    toughness_with_witness(g).0
}

/// Minimum of `|S| / ω(G - S)` over disconnecting `S`, scanned by increasing
/// `|S|`. A size class is skipped once `s / (n - s)`, the best ratio it could
/// reach, is no better than the current optimum; since that bound grows with
/// `s`, the scan stops there.
pub fn toughness_with_witness(g: &Graph) -> (ToughnessValue, Option<ToughnessWitness>) {
    if g.is_complete() {
        return (ToughnessValue::Infinite, None);
    }
    let parts = g.component_count(VertexSet::EMPTY);
    if parts > 1 {
        let w = ToughnessWitness { cut: VertexSet::EMPTY, parts, value: ExactRatio::ZERO };
        return (ToughnessValue::ZERO, Some(w));
    }
    let n = g.n();
    let mut best: Option<ToughnessWitness> = None;
    for size in 1..=n - 2 {
        if let Some(b) = best {
            if b.value.cmp_fraction(size as u64, (n - size) as u64).is_ge() {
                break;
            }
        }
        for cut in g.vertices().subsets_of_size(size) {
            let parts = g.component_count(cut);
            if parts < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => b.value.cmp_fraction(size as u64, parts as u64).is_lt(),
            };
            if better {
                let value = ExactRatio::new(size as u64, parts as u64).expect("parts >= 2");
                best = Some(ToughnessWitness { cut, parts, value });
            }
        }
    }
    let w = best.expect("a connected noncomplete graph has a disconnecting set");
    (ToughnessValue::Finite(w.value), Some(w))
}

/// Whether `|S| >= t · ω(G - S)` for every `S` with `ω(G - S) > 1`.
pub fn is_t_tough(g: &Graph, t: ExactRatio) -> bool {
    if t == ExactRatio::ZERO || g.is_complete() {
        return true;
    }
    let n = g.n();
    for size in 0..=n.saturating_sub(2) {
        // Even ω = n - size cannot violate the bound from here on.
        if t.le_scaled((n - size) as u64, size as u64) {
            break;
        }
        for cut in g.vertices().subsets_of_size(size) {
            let parts = g.component_count(cut);
            if parts > 1 && !t.le_scaled(parts as u64, size as u64) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinimalityVerdict {
    MinimallyTough(ExactRatio),
    /// Deleting `edge` leaves the toughness unchanged.
    NotMinimal {
        toughness: ExactRatio,
        edge: (usize, usize),
    },
    CompleteGraph,
    Disconnected,
}

impl MinimalityVerdict {
    pub fn is_minimally_tough(self) -> bool {
        matches!(self, MinimalityVerdict::MinimallyTough(_))
    }
}

/// `τ(G - e) < τ(G)` for every edge, checked as "`G - e` is not `τ(G)`-tough".
/// Edges are tried in lexicographic order.
pub fn is_minimally_tough(g: &Graph) -> MinimalityVerdict {
    let t = match toughness(g) {
        ToughnessValue::Infinite => return MinimalityVerdict::CompleteGraph,
        ToughnessValue::Finite(t) if t == ExactRatio::ZERO => return MinimalityVerdict::Disconnected,
        ToughnessValue::Finite(t) => t,
    };
    for (u, v) in g.edges() {
        if is_t_tough(&g.without_edge(u, v), t) {
            return MinimalityVerdict::NotMinimal { toughness: t, edge: (u, v) };
        }
    }
    MinimalityVerdict::MinimallyTough(t)
}
