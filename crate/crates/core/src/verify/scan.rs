use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use super::report::{RatedGraph, ScanCount, ScanReport, Violation};
use crate::chordal::is_chordal;
use crate::enumerate::{class_keys, GraphClass, MAX_ENUMERATION_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::ratio::{ExactRatio, ToughnessValue};
use crate::recognize::{is_interval_like, is_split, is_strongly_chordal, universal_vertices};
use crate::toughness::{is_minimally_tough, toughness, MinimalityVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    Chordal,
    StronglyChordal,
    Split,
    IntervalLike,
    All,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 5] = [
        ClassFilter::Chordal,
        ClassFilter::StronglyChordal,
        ClassFilter::Split,
        ClassFilter::IntervalLike,
        ClassFilter::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::Chordal => "chordal",
            ClassFilter::StronglyChordal => "strongly_chordal",
            ClassFilter::Split => "split",
            ClassFilter::IntervalLike => "interval_like",
            ClassFilter::All => "all",
        }
    }

    /// Every restricted class lies inside the chordal graphs, so they are
    /// drawn from the chordal enumeration.
    fn source(self) -> GraphClass {
        match self {
            ClassFilter::All => GraphClass::All,
            _ => GraphClass::Chordal,
        }
    }

    pub fn admits(self, g: &Graph) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Chordal => is_chordal(g),
            ClassFilter::StronglyChordal => is_strongly_chordal(g).member,
            ClassFilter::Split => is_split(g).member,
            ClassFilter::IntervalLike => is_interval_like(g),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.replace('-', "_");
        ClassFilter::ALL.into_iter().find(|c| c.name() == key).ok_or_else(|| {
            let names: Vec<_> = ClassFilter::ALL.iter().map(|c| c.name()).collect();
            format!("unknown class {s:?}; expected one of {}", names.join(", "))
        })
    }
}

pub const MAX_SCAN_VERTICES: usize = MAX_ENUMERATION_VERTICES;

/// Toughness of `g` if it is minimally tough with `τ > 1/2`.
pub fn minimally_tough_above_half(g: &Graph) -> Option<ExactRatio> {
    match toughness(g) {
        ToughnessValue::Finite(t) if t > ExactRatio::HALF => match is_minimally_tough(g) {
            MinimalityVerdict::MinimallyTough(t) => Some(t),
            _ => None,
        },
        _ => None,
    }
}

/// Which proved theorem a minimally tough graph with `τ = t > 1/2` contradicts, if any.
pub fn contradicted_theorem(g: &Graph, t: ExactRatio) -> Option<String> {
    let chordal = is_chordal(g);
    if chordal && t <= ExactRatio::ONE {
        return Some(format!("minimally {t}-tough chordal graph with τ in (1/2, 1]"));
    }
    if chordal && !universal_vertices(g).is_empty() {
        return Some(format!("minimally {t}-tough chordal graph with a universal vertex"));
    }
    if is_strongly_chordal(g).member {
        return Some(format!("minimally {t}-tough strongly chordal graph"));
    }
    if is_split(g).member {
        return Some(format!("minimally {t}-tough split graph"));
    }
    if is_interval_like(g) {
        return Some(format!("minimally {t}-tough interval-like graph"));
    }
    None
}

struct Hit {
    graph6: String,
    tau: ExactRatio,
    chordal: bool,
    contradiction: Option<String>,
}

/// Every connected graph of the class with at most `n_max` vertices, searched
/// for minimally tough members with `τ > 1/2`. Results are in canonical order.
pub fn scan_conjecture(n_max: usize, class_filter: ClassFilter) -> Result<ScanReport> {
    if !(1..=MAX_SCAN_VERTICES).contains(&n_max) {
        return Err(Error::ParameterOutOfRange { name: "n_max", value: n_max, min: 1, max: MAX_SCAN_VERTICES });
    }
    let start = Instant::now();
    let mut per_n = Vec::with_capacity(n_max);
    let mut hits = Vec::new();
    for n in 1..=n_max {
        let keys = class_keys(n, class_filter.source())?;
        let found: Vec<Option<Hit>> = keys
            .par_iter()
            .filter_map(|key| {
                let g = key.to_graph();
                if !g.is_connected() || !class_filter.admits(&g) {
                    return None;
                }
                Some(minimally_tough_above_half(&g).map(|tau| Hit {
                    graph6: to_graph6(&g).expect("n <= 9"),
                    tau,
                    chordal: is_chordal(&g),
                    contradiction: contradicted_theorem(&g, tau),
                }))
            })
            .collect();
        per_n.push(ScanCount { n, scanned: found.len() as u64 });
        hits.extend(found.into_iter().flatten());
    }
    let graphs_checked = per_n.iter().map(|c| c.scanned).sum();
    let minimally_tough = hits.iter().map(|h| RatedGraph::new(h.graph6.clone(), h.tau)).collect();
    let counterexamples = hits.iter().filter(|h| h.chordal).map(|h| RatedGraph::new(h.graph6.clone(), h.tau)).collect();
    let violations = hits
        .iter()
        .filter_map(|h| h.contradiction.as_ref().map(|d| Violation { graph6: h.graph6.clone(), detail: d.clone() }))
        .collect();
    Ok(ScanReport {
        suite: "conjecture_scan".to_string(),
        class_filter: class_filter.name().to_string(),
        n_max,
        per_n,
        graphs_checked,
        minimally_tough,
        counterexamples,
        violations,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::wheel;
    use crate::graph6::parse_graph6;

    #[test]
    fn class_names_round_trip() {
        for c in ClassFilter::ALL {
            assert_eq!(c.name().parse::<ClassFilter>().unwrap(), c);
        }
        assert_eq!("interval-like".parse::<ClassFilter>().unwrap(), ClassFilter::IntervalLike);
        assert!("bogus".parse::<ClassFilter>().is_err());
    }

    #[test]
    fn bounds() {
        assert!(scan_conjecture(0, ClassFilter::All).is_err());
        assert!(scan_conjecture(10, ClassFilter::Chordal).is_err());
    }

    #[test]
    fn small_scans() {
        let r = scan_conjecture(6, ClassFilter::Chordal).unwrap();
        assert!(r.counterexamples.is_empty() && r.violations.is_empty());
        // Connected chordal graphs on 1..=6 vertices.
        assert_eq!(r.per_n.iter().map(|c| c.scanned).collect::<Vec<_>>(), vec![1, 1, 2, 5, 15, 58]);

        let r = scan_conjecture(6, ClassFilter::All).unwrap();
        assert!(r.violations.is_empty());
        let found: Vec<_> = r.minimally_tough.iter().map(|h| parse_graph6(&h.graph6).unwrap()).collect();
        for n in [5, 6] {
            let w = crate::canon::canonical_key(&wheel(n).unwrap()).unwrap();
            assert!(found.iter().any(|g| crate::canon::canonical_key(g).unwrap() == w), "W{n}");
        }
        assert_eq!(r.per_n.iter().map(|c| c.scanned).collect::<Vec<_>>(), vec![1, 1, 2, 6, 21, 112]);
    }
}
