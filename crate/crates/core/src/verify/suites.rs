use std::time::Instant;

use rayon::prelude::*;

use super::report::{CheckReport, Violation};
use super::scan::minimally_tough_above_half;
use crate::bits::VertexSet;
use crate::chordal::{
    clique_tree, clique_trees, is_chordal, is_minimal_separator, is_moplicial, is_simple, is_simplicial,
    maximum_neighbor, maximum_neighboring_edge, minimal_separators, minimal_separators_via_clique_tree, moplexes, peo,
};
use crate::enumerate::{class_keys, GraphClass};
use crate::error::{Error, Result};
use crate::families::{matched_cliques, wheel};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::ratio::{ExactRatio, ToughnessValue};
use crate::recognize::{
    find_hole, find_induced_sun, find_split_obstruction, is_split, is_strongly_chordal, is_sun_free,
    simple_elimination_is_order_independent, simple_elimination_ordering, split_partition, universal_vertices,
};
use crate::toughness::{
    check_condition2_restricted, check_non_minimality_characterization, check_sufficient_condition, connectivity,
    find_edge_witness_set, is_minimally_tough, toughness, toughness_with_witness, CharacterizationVerdict,
    MinimalityVerdict,
};

/// Outcome of a check on one graph.
enum Check {
    /// The graph is outside the suite's hypothesis.
    Skip,
    Pass,
    Fail(String),
}

impl Check {
    fn require(ok: bool, detail: impl FnOnce() -> String) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(detail())
        }
    }
}

type Tally = (u64, Vec<Violation>);

/// A registered suite: name, default and maximal `n_max`, and its runner.
pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    pub default_n: usize,
    pub min_n: usize,
    pub max_n: usize,
    run: fn(usize) -> Result<Tally>,
}

macro_rules! suite {
    ($name:ident, $default:expr, $min:expr, $max:expr, $summary:expr) => {
        Suite { name: stringify!($name), summary: $summary, default_n: $default, min_n: $min, max_n: $max, run: $name }
    };
}

pub static SUITES: &[Suite] = &[
    suite!(prop_connectivity_bound, 7, 1, 9, "τ <= κ/2 for connected noncomplete graphs"),
    suite!(prop_toughness_witness, 7, 1, 9, "toughness witness re-check and full-scan oracle"),
    suite!(prop_toughness_monotone, 6, 1, 9, "τ(G - e) <= τ(G) for every edge"),
    suite!(prop_witness_sets, 6, 1, 9, "every edge of a minimally tough graph has a witness set"),
    suite!(prop_minseparator, 7, 1, 9, "S-full test agrees with minimal u-v separators"),
    suite!(thm_dirac, 7, 1, 9, "chordal iff every minimal separator is a clique"),
    suite!(prop_hole_chordal, 7, 1, 9, "a hole exists iff there is no perfect elimination ordering"),
    suite!(prop_cliquetree_separators, 8, 1, 9, "clique-tree edge intersections are the minimal separators"),
    suite!(prop_moplex_leaf, 7, 1, 9, "N[M] is a leaf of some clique tree for every moplex M"),
    suite!(thm_two_moplexes, 7, 1, 9, "every noncomplete graph has at least two moplexes"),
    suite!(
        prop_simple_moplicial,
        7,
        1,
        9,
        "simple implies simplicial and moplicial; moplicial implies simplicial in chordal graphs"
    ),
    suite!(thm_farber, 7, 1, 9, "greedy simple elimination succeeds iff chordal and sun-free"),
    suite!(thm_split_characterization, 7, 1, 9, "split iff (C4, C5, 2K2)-free"),
    suite!(simple_elimination_order, 6, 1, 9, "simple elimination outcome does not depend on the order"),
    suite!(thm_characterization, 6, 1, 9, "path/separator characterization agrees with direct minimality"),
    suite!(lemma_restricted_separators, 6, 1, 9, "restricted and unrestricted separator conditions agree"),
    suite!(lemma_sufficient, 7, 1, 9, "the common-neighbor condition at t = τ rules out minimality"),
    suite!(
        thm_chordal_interval,
        7,
        1,
        9,
        "no minimally tough chordal graph with τ in (1/2, 1]; such graphs have a hole"
    ),
    suite!(
        lemma_moplicial_neighbors,
        7,
        1,
        9,
        "a moplicial vertex with a maximum neighbor or edge rules out minimality"
    ),
    suite!(thm_strongly_chordal, 7, 1, 9, "no minimally tough strongly chordal graph with τ > 1/2"),
    suite!(thm_split, 7, 1, 9, "no minimally tough split graph with τ > 1/2"),
    suite!(thm_universal, 7, 1, 9, "no minimally tough chordal graph with a universal vertex and τ > 1"),
    suite!(cor_sun_or_hole, 7, 1, 9, "minimally tough with τ > 1/2 implies a hole or an induced sun"),
    suite!(cor_split_obstructions, 7, 1, 9, "minimally tough with τ > 1/2 implies an induced C4, C5 or 2K2"),
    suite!(thm_stars, 7, 1, 9, "with a universal vertex and τ <= 1, minimally tough means a star"),
    suite!(family_wheels, 10, 5, 12, "wheels on 5..=n vertices have the stated toughness and are minimal"),
    suite!(family_matched_cliques, 8, 4, 10, "matched cliques with 2k <= n: claw-free, κ = k, τ = k/2, minimal"),
    suite!(graph6_roundtrip, 7, 1, 9, "graph6 encoding round-trips"),
];

pub fn find_suite(name: &str) -> Result<&'static Suite> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs one suite exhaustively up to `n_max` (the suite's default if `None`).
pub fn run_suite(name: &str, n_max: Option<usize>) -> Result<CheckReport> {
    let suite = find_suite(name)?;
    let n_max = n_max.unwrap_or(suite.default_n);
    if !(suite.min_n..=suite.max_n).contains(&n_max) {
        return Err(Error::ParameterOutOfRange { name: "n_max", value: n_max, min: suite.min_n, max: suite.max_n });
    }
    let start = Instant::now();
    let (graphs_checked, violations) = (suite.run)(n_max)?;
    Ok(CheckReport {
        suite: suite.name.to_string(),
        n_max,
        graphs_checked,
        violations,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

/// Applies `check` to every graph of `class` on `1..=n_max` vertices, in
/// parallel; violations come back in canonical order.
fn exhaustive(n_max: usize, class: GraphClass, check: impl Fn(&Graph) -> Check + Sync) -> Result<Tally> {
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let keys = class_keys(n, class)?;
        let outcomes: Vec<Check> = keys.par_iter().map(|k| check(&k.to_graph())).collect();
        for (key, outcome) in keys.iter().zip(outcomes) {
            match outcome {
                Check::Skip => {}
                Check::Pass => checked += 1,
                Check::Fail(detail) => {
                    checked += 1;
                    violations.push(Violation { graph6: to_graph6(&key.to_graph())?, detail });
                }
            }
        }
    }
    Ok((checked, violations))
}

fn connected_noncomplete(g: &Graph) -> Option<ExactRatio> {
    match toughness(g) {
        ToughnessValue::Finite(t) if t > ExactRatio::ZERO => Some(t),
        _ => None,
    }
}

fn is_minimal(g: &Graph) -> bool {
    is_minimally_tough(g).is_minimally_tough()
}

fn prop_connectivity_bound(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let Some(t) = connected_noncomplete(g) else { return Check::Skip };
        let k = connectivity(g) as u64;
        Check::require(t.cmp_fraction(k, 2).is_ge(), || format!("τ = {t} exceeds κ/2 = {k}/2"))
    })
}

fn prop_toughness_witness(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let (tau, witness) = toughness_with_witness(g);
        let Some(w) = witness else {
            return Check::require(g.is_complete() && tau.is_infinite(), || "missing witness".into());
        };
        let parts = g.component_count(w.cut);
        if parts != w.parts || parts < 2 {
            return Check::Fail(format!("cut {} leaves {parts} components, reported {}", w.cut, w.parts));
        }
        if ExactRatio::new(w.cut.len() as u64, parts as u64) != Some(w.value) || tau != ToughnessValue::Finite(w.value)
        {
            return Check::Fail(format!("ratio of cut {} does not match τ = {tau}", w.cut));
        }
        let better = g.vertices().subsets().find(|&s| {
            let c = g.component_count(s);
            c >= 2 && w.value.cmp_fraction(s.len() as u64, c as u64).is_lt()
        });
        Check::require(better.is_none(), || format!("cut {} beats τ = {tau}", better.unwrap()))
    })
}

fn prop_toughness_monotone(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let tau = toughness(g);
        let bad = g.edges().find(|&(u, v)| toughness(&g.without_edge(u, v)) > tau);
        Check::require(bad.is_none(), || format!("deleting {:?} raises τ above {tau}", bad.unwrap()))
    })
}

fn prop_witness_sets(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let Some(t) = connected_noncomplete(g) else { return Check::Skip };
        if !is_minimal(g) {
            return Check::Skip;
        }
        for (u, v) in g.edges() {
            let without = g.without_edge(u, v);
            let ok = match find_edge_witness_set(g, (u, v)) {
                Ok(Some(w)) if w.cut.is_empty() => without.separates(VertexSet::EMPTY, u, v),
                Ok(Some(w)) => {
                    let s = w.cut.len() as u64;
                    !w.cut.contains(u)
                        && !w.cut.contains(v)
                        && without.separates(w.cut, u, v)
                        && t.le_scaled(g.component_count(w.cut) as u64, s)
                        && !t.le_scaled(without.component_count(w.cut) as u64, s)
                }
                _ => false,
            };
            if !ok {
                return Check::Fail(format!("edge ({u}, {v}) has no valid witness set"));
            }
        }
        Check::Pass
    })
}

/// `S` separates some nonadjacent pair and is inclusion-minimal for it.
fn is_minimal_pair_separator(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    rest.iter().any(|u| {
        rest.iter()
            .filter(|&v| v > u && !g.has_edge(u, v))
            .any(|v| g.separates(s, u, v) && s.iter().all(|x| !g.separates(s.without(x), u, v)))
    })
}

fn prop_minseparator(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let bad = g.vertices().subsets().find(|&s| is_minimal_separator(g, s) != is_minimal_pair_separator(g, s));
        Check::require(bad.is_none(), || format!("disagreement on {}", bad.unwrap()))
    })
}

fn thm_dirac(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let chordal = is_chordal(g);
        let cliques = minimal_separators(g).iter().all(|&s| g.is_clique(s));
        Check::require(chordal == cliques, || format!("chordal = {chordal}, separators all cliques = {cliques}"))
    })
}

fn prop_hole_chordal(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let hole = find_hole(g);
        let order = peo(g);
        Check::require(hole.is_some() != order.is_some(), || format!("hole {hole:?}, peo {order:?}"))
    })
}

fn prop_cliquetree_separators(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::Chordal, |g| {
        if !g.is_connected() {
            return Check::Skip;
        }
        let via_tree = clique_tree(g).and_then(|t| minimal_separators_via_clique_tree(g, &t));
        match via_tree {
            Ok(seps) => {
                let direct = minimal_separators(g);
                Check::require(seps == direct, || format!("tree gives {seps:?}, direct {direct:?}"))
            }
            Err(e) => Check::Fail(e.to_string()),
        }
    })
}

fn prop_moplex_leaf(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::Chordal, |g| {
        if !g.is_connected() {
            return Check::Skip;
        }
        let trees = match clique_trees(g) {
            Ok(t) => t,
            Err(e) => return Check::Fail(e.to_string()),
        };
        for m in moplexes(g) {
            let closed = m.members.union(m.neighborhood(g));
            let at_leaf = trees.iter().any(|t| t.leaves().into_iter().any(|i| t.cliques[i] == closed));
            if !at_leaf {
                return Check::Fail(format!("N[{}] = {closed} is not a leaf of any clique tree", m.members));
            }
        }
        Check::Pass
    })
}

fn thm_two_moplexes(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        if g.is_complete() {
            return Check::Skip;
        }
        let count = moplexes(g).len();
        Check::require(count >= 2, || format!("{count} moplexes"))
    })
}

fn prop_simple_moplicial(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let chordal = is_chordal(g);
        for v in g.vertices() {
            let simple = is_simple(g, v).expect("vertex in range");
            let simplicial = is_simplicial(g, v).expect("vertex in range");
            let moplicial = is_moplicial(g, v);
            if simple && !(simplicial && moplicial) {
                return Check::Fail(format!("simple vertex {v}: simplicial = {simplicial}, moplicial = {moplicial}"));
            }
            if chordal && moplicial && !simplicial {
                return Check::Fail(format!("moplicial vertex {v} of a chordal graph is not simplicial"));
            }
        }
        Check::Pass
    })
}

fn thm_farber(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let greedy = simple_elimination_ordering(g).is_some();
        let chordal_sun_free = is_chordal(g) && is_sun_free(g);
        if greedy != chordal_sun_free {
            return Check::Fail(format!("greedy = {greedy}, chordal and sun-free = {chordal_sun_free}"));
        }
        let verdict = is_strongly_chordal(g);
        let ok = verdict.member == greedy && verdict.witness.as_ref().is_some_and(|w| w.verify(g));
        Check::require(ok, || format!("bad verdict {verdict:?}"))
    })
}

fn thm_split_characterization(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let partition = split_partition(g).is_some();
        let free = find_split_obstruction(g).is_none();
        if partition != free {
            return Check::Fail(format!("partition = {partition}, (C4, C5, 2K2)-free = {free}"));
        }
        let verdict = is_split(g);
        let ok = verdict.member == partition && verdict.witness.as_ref().is_some_and(|w| w.verify(g));
        Check::require(ok, || format!("bad verdict {verdict:?}"))
    })
}

fn simple_elimination_order(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        Check::require(simple_elimination_is_order_independent(g), || "outcome depends on deletion order".into())
    })
}

fn thm_characterization(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        if connected_noncomplete(g).is_none() {
            return Check::Skip;
        }
        let characterized = match check_non_minimality_characterization(g) {
            Ok(v) => v != CharacterizationVerdict::NoEdge,
            Err(e) => return Check::Fail(e.to_string()),
        };
        let direct = !is_minimal(g);
        Check::require(characterized == direct, || {
            format!("characterization says not minimal = {characterized}, direct = {direct}")
        })
    })
}

fn lemma_restricted_separators(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        if connected_noncomplete(g).is_none() {
            return Check::Skip;
        }
        for e in g.edges() {
            match check_condition2_restricted(g, e) {
                Ok(c) if c.agree() => {}
                Ok(c) => return Check::Fail(format!("edge {e:?}: {c:?}")),
                Err(err) => return Check::Fail(err.to_string()),
            }
        }
        Check::Pass
    })
}

fn lemma_sufficient(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let Some(t) = connected_noncomplete(g) else { return Check::Skip };
        match check_sufficient_condition(g, t) {
            None => Check::Pass,
            Some(e) => Check::require(!is_minimal(g), || format!("edge {e:?} meets the condition at t = {t}")),
        }
    })
}

fn thm_chordal_interval(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let Some(t) = minimally_tough_above_half(g) else { return Check::Skip };
        if t > ExactRatio::ONE {
            return Check::Pass;
        }
        if is_chordal(g) {
            return Check::Fail(format!("minimally {t}-tough chordal graph"));
        }
        Check::require(find_hole(g).is_some(), || format!("minimally {t}-tough graph without a hole"))
    })
}

fn lemma_moplicial_neighbors(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::Chordal, |g| {
        let Some(t) = connected_noncomplete(g) else { return Check::Skip };
        if t <= ExactRatio::HALF {
            return Check::Skip;
        }
        let special = g.vertices().iter().find(|&v| {
            is_moplicial(g, v)
                && (maximum_neighbor(g, v).expect("vertex in range").is_some()
                    || maximum_neighboring_edge(g, v).expect("vertex in range").is_some())
        });
        match special {
            None => Check::Pass,
            Some(v) => Check::require(!is_minimal(g), || format!("vertex {v} qualifies, yet minimally {t}-tough")),
        }
    })
}

fn no_minimal_member(n_max: usize, member: impl Fn(&Graph) -> bool + Sync, above: ExactRatio) -> Result<Tally> {
    exhaustive(n_max, GraphClass::Chordal, |g| {
        if !g.is_connected() || !member(g) {
            return Check::Skip;
        }
        match minimally_tough_above_half(g) {
            Some(t) if t > above => Check::Fail(format!("minimally {t}-tough member")),
            _ => Check::Pass,
        }
    })
}

fn thm_strongly_chordal(n_max: usize) -> Result<Tally> {
    no_minimal_member(n_max, |g| is_strongly_chordal(g).member, ExactRatio::HALF)
}

fn thm_split(n_max: usize) -> Result<Tally> {
    no_minimal_member(n_max, |g| is_split(g).member, ExactRatio::HALF)
}

fn thm_universal(n_max: usize) -> Result<Tally> {
    no_minimal_member(n_max, |g| !universal_vertices(g).is_empty(), ExactRatio::ONE)
}

fn cor_sun_or_hole(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let Some(t) = minimally_tough_above_half(g) else { return Check::Skip };
        let sun = || g.n() >= 6 && find_induced_sun(g, g.n() / 2).expect("k_max in range").is_some();
        Check::require(find_hole(g).is_some() || sun(), || format!("minimally {t}-tough, no hole and no sun"))
    })
}

fn cor_split_obstructions(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let Some(t) = minimally_tough_above_half(g) else { return Check::Skip };
        Check::require(find_split_obstruction(g).is_some(), || format!("minimally {t}-tough, no C4, C5 or 2K2"))
    })
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && g.edge_count() == n - 1 && universal_vertices(g).len() == 1
}

fn thm_stars(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        if universal_vertices(g).is_empty() {
            return Check::Skip;
        }
        let Some(t) = connected_noncomplete(g) else { return Check::Skip };
        if t > ExactRatio::ONE {
            return Check::Skip;
        }
        let minimal = is_minimal(g);
        let star = is_star(g);
        if minimal != star {
            return Check::Fail(format!("minimally tough = {minimal}, star = {star}"));
        }
        let expected = ExactRatio::new(1, g.n() as u64 - 1);
        Check::require(!star || Some(t) == expected, || format!("star with τ = {t}"))
    })
}

fn family_wheels(n_max: usize) -> Result<Tally> {
    let mut violations = Vec::new();
    for n in 5..=n_max {
        let g = wheel(n)?;
        let m = n as u64;
        let expected =
            if n % 2 == 1 { ExactRatio::new(m + 1, m - 1) } else { ExactRatio::new(m, m - 2) }.expect("den > 0");
        let verdict = is_minimally_tough(&g);
        if verdict != MinimalityVerdict::MinimallyTough(expected) {
            violations
                .push(Violation { graph6: to_graph6(&g)?, detail: format!("W{n}: {verdict:?}, expected {expected}") });
        }
    }
    Ok(((n_max - 4) as u64, violations))
}

fn is_claw_free(g: &Graph) -> bool {
    g.vertices().iter().all(|v| g.neighbors(v).subsets_of_size(3).all(|s| !g.is_independent(s)))
}

fn family_matched_cliques(n_max: usize) -> Result<Tally> {
    let mut violations = Vec::new();
    for k in 2..=n_max / 2 {
        let g = matched_cliques(k)?;
        let expected = ExactRatio::new(k as u64, 2).expect("den > 0");
        let kappa = connectivity(&g);
        let verdict = is_minimally_tough(&g);
        if !is_claw_free(&g) || kappa != k || verdict != MinimalityVerdict::MinimallyTough(expected) {
            violations.push(Violation {
                graph6: to_graph6(&g)?,
                detail: format!("k = {k}: claw-free = {}, κ = {kappa}, {verdict:?}", is_claw_free(&g)),
            });
        }
    }
    Ok(((n_max / 2 - 1) as u64, violations))
}

fn graph6_roundtrip(n_max: usize) -> Result<Tally> {
    exhaustive(n_max, GraphClass::All, |g| {
        let text = match to_graph6(g) {
            Ok(s) => s,
            Err(e) => return Check::Fail(e.to_string()),
        };
        let ok = parse_graph6(&text).is_ok_and(|h| &h == g && to_graph6(&h).as_deref() == Ok(text.as_str()));
        Check::require(ok, || format!("{text} does not round-trip"))
    })
}
