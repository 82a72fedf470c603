use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use toughlab_core::chordal::{is_chordal, minimal_separators, moplexes};
use toughlab_core::recognize::{is_interval_like, is_split, is_strongly_chordal};
use toughlab_core::toughness::{find_edge_witness_set, is_minimally_tough, toughness_with_witness, MinimalityVerdict};
use toughlab_core::{to_graph6, Error, Graph, ToughnessValue};

/// Exact analysis is exponential in `n`; larger inputs are refused.
pub const MAX_ANALYZE_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub edge: (usize, usize),
    pub cut: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classes {
    pub chordal: bool,
    pub strongly_chordal: bool,
    pub split: bool,
    pub interval_like: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    /// `"num/den"`, `"inf"` or `"0"`.
    pub toughness: String,
    pub toughness_cut: Option<Vec<usize>>,
    /// One of `minimally_tough`, `not_minimal`, `complete`, `disconnected`.
    pub verdict: String,
    /// For `not_minimal`: an edge whose deletion keeps the toughness.
    pub witness_edge: Option<(usize, usize)>,
    /// For `minimally_tough`: a witness set for every edge.
    pub witness_sets: Vec<EdgeWitness>,
    pub classes: Classes,
    pub moplexes: Vec<Vec<usize>>,
    pub minimal_separators: Vec<Vec<usize>>,
}

pub fn analyze(g: &Graph) -> Result<Analysis, Error> {
    if g.n() > MAX_ANALYZE_VERTICES {
        return Err(Error::TooLarge { what: "analyze", max: MAX_ANALYZE_VERTICES, n: g.n() });
    }
    let (tau, cut) = toughness_with_witness(g);
    let mut witness_edge = None;
    let mut witness_sets = Vec::new();
    let verdict = match is_minimally_tough(g) {
        MinimalityVerdict::MinimallyTough(_) => {
            for e in g.edges() {
                if let Some(w) = find_edge_witness_set(g, e)? {
                    witness_sets.push(EdgeWitness { edge: e, cut: w.cut.to_vec() });
                }
            }
            "minimally_tough"
        }
        MinimalityVerdict::NotMinimal { edge, .. } => {
            witness_edge = Some(edge);
            "not_minimal"
        }
        MinimalityVerdict::CompleteGraph => "complete",
        MinimalityVerdict::Disconnected => "disconnected",
    };
    let toughness = match tau {
        ToughnessValue::Infinite => "inf".to_string(),
        ToughnessValue::Finite(t) => t.to_string(),
    };
    Ok(Analysis {
        graph6: to_graph6(g)?,
        n: g.n(),
        edges: g.edge_count(),
        toughness,
        toughness_cut: cut.map(|w| w.cut.to_vec()),
        verdict: verdict.to_string(),
        witness_edge,
        witness_sets,
        classes: Classes {
            chordal: is_chordal(g),
            strongly_chordal: is_strongly_chordal(g).member,
            split: is_split(g).member,
            interval_like: is_interval_like(g),
        },
        moplexes: moplexes(g).into_iter().map(|m| m.members.to_vec()).collect(),
        minimal_separators: minimal_separators(g).into_iter().map(|s| s.to_vec()).collect(),
    })
}

fn set(v: &[usize]) -> String {
    let items: Vec<_> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn sets(vs: &[Vec<usize>]) -> String {
    if vs.is_empty() {
        return "none".to_string();
    }
    vs.iter().map(|v| set(v)).collect::<Vec<_>>().join(" ")
}

pub fn render_text(a: &Analysis) -> String {
    let mut out = String::new();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "graph6: {}", a.graph6).unwrap();
    writeln!(out, "n: {}", a.n).unwrap();
    writeln!(out, "edges: {}", a.edges).unwrap();
    match &a.toughness_cut {
        Some(cut) => writeln!(out, "toughness: {} (cut {})", a.toughness, set(cut)).unwrap(),
        None => writeln!(out, "toughness: {}", a.toughness).unwrap(),
    }
    let verdict = match a.verdict.as_str() {
        "minimally_tough" => format!("minimally {}-tough", a.toughness),
        "not_minimal" => {
            let (u, v) = a.witness_edge.expect("not_minimal carries an edge");
            format!("not minimally tough (deleting {u}-{v} keeps τ = {})", a.toughness)
        }
        "complete" => "complete".to_string(),
        _ => "disconnected".to_string(),
    };
    writeln!(out, "verdict: {verdict}").unwrap();
    for w in &a.witness_sets {
        writeln!(out, "  S({}-{}) = {}", w.edge.0, w.edge.1, set(&w.cut)).unwrap();
    }
    let c = &a.classes;
    writeln!(
        out,
        "chordal: {}  strongly chordal: {}  split: {}  interval-like: {}",
        yes_no(c.chordal),
        yes_no(c.strongly_chordal),
        yes_no(c.split),
        yes_no(c.interval_like)
    )
    .unwrap();
    writeln!(out, "moplexes: {}", sets(&a.moplexes)).unwrap();
    writeln!(out, "minimal separators: {}", sets(&a.minimal_separators)).unwrap();
    out
}
