//! Named graph families with fixed labelings.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(name: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::ParameterTooSmall { name, value, min })
    } else {
        Ok(())
    }
}

/// `K_{1,l}`: center 0, leaves `1..=l`.
pub fn star(leaves: usize) -> Result<Graph> {
    at_least("leaves", leaves, 1)?;
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// `W_n` on `n` vertices: hub 0 and the rim cycle `1..n`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("n", n, 4)?;
    let rim = n - 1;
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("n", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("n", n, 1)?;
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("n", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `S_k`: clique `A = 0..k`, independent `B = k..2k`, with `a_i ~ b_j` iff
/// `i == j` or `i == j + 1 (mod k)`.
pub fn k_sun(k: usize) -> Result<Graph> {
    at_least("k", k, 3)?;
    let mut edges: Vec<_> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    for j in 0..k {
        edges.push((j, k + j));
        edges.push(((j + 1) % k, k + j));
    }
    Graph::from_edges(2 * k, &edges)
}

/// Two `k`-cliques `0..k` and `k..2k` joined by the matching `i <-> i + k`.
pub fn matched_cliques(k: usize) -> Result<Graph> {
    at_least("k", k, 2)?;
    let mut edges = Vec::new();
    for side in [0, k] {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((side + i, side + j));
            }
        }
    }
    edges.extend((0..k).map(|i| (i, i + k)));
    Graph::from_edges(2 * k, &edges)
}

/// A family name and parameter, written `name:param` (e.g. `wheel:5`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Star(usize),
    Wheel(usize),
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Sun(usize),
    MatchedCliques(usize),
}

impl Family {
    pub const NAMES: [&'static str; 7] = ["star", "wheel", "cycle", "complete", "path", "sun", "matched"];

    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Star(l) => star(l),
            Family::Wheel(n) => wheel(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Path(n) => path(n),
            Family::Sun(k) => k_sun(k),
            Family::MatchedCliques(k) => matched_cliques(k),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (name, param) = s.split_once(':').ok_or_else(|| format!("expected name:param, got {s:?}"))?;
        let p: usize = param.parse().map_err(|e| format!("bad parameter {param:?}: {e}"))?;
        Ok(match name {
            "star" => Family::Star(p),
            "wheel" => Family::Wheel(p),
            "cycle" => Family::Cycle(p),
            "complete" => Family::Complete(p),
            "path" => Family::Path(p),
            "sun" => Family::Sun(p),
            "matched" | "matched_cliques" => Family::MatchedCliques(p),
            other => return Err(format!("unknown family {other:?}; expected one of {:?}", Family::NAMES)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let s = star(3).unwrap();
        assert_eq!((s.n(), s.edge_count(), s.degree(0)), (4, 3, 3));

        let w = wheel(5).unwrap();
        assert_eq!((w.n(), w.edge_count(), w.degree(0)), (5, 8, 4));
        assert!((1..5).all(|v| w.degree(v) == 3));
        assert!(wheel(4).unwrap().is_complete());

        let sun = k_sun(3).unwrap();
        assert_eq!((sun.n(), sun.edge_count()), (6, 9));
        assert!(sun.has_edge(0, 3) && sun.has_edge(1, 3) && !sun.has_edge(2, 3));

        let m = matched_cliques(4).unwrap();
        assert_eq!((m.n(), m.edge_count()), (8, 16));
        assert!((0..8).all(|v| m.degree(v) == 4));

        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
    }

    #[test]
    fn minimums() {
        assert!(star(0).is_err());
        assert!(wheel(3).is_err());
        assert!(cycle(2).is_err());
        assert!(k_sun(2).is_err());
        assert!(matched_cliques(1).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn parses_names() {
        assert_eq!("wheel:5".parse::<Family>().unwrap(), Family::Wheel(5));
        assert_eq!("matched:3".parse::<Family>().unwrap().build().unwrap().n(), 6);
        assert!("wheel".parse::<Family>().is_err());
        assert!("cube:3".parse::<Family>().is_err());
    }
}
