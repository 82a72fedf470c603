//! The acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_minimally_tough, brute_split, brute_toughness, is_complete, is_connected, Frac};
use toughlab_core::canon::canonical_key;
use toughlab_core::chordal::{clique_tree, is_chordal, minimal_separators, minimal_separators_via_clique_tree};
use toughlab_core::enumerate::graphs;
use toughlab_core::families::{matched_cliques, star, wheel};
use toughlab_core::recognize::{
    find_split_obstruction, is_sun_free, simple_elimination_ordering, split_partition, universal_vertices,
};
use toughlab_core::toughness::{
    check_condition2_restricted, check_non_minimality_characterization, check_sufficient_condition, is_minimally_tough,
    toughness, CharacterizationVerdict, MinimalityVerdict,
};
use toughlab_core::verify::{run_suite, scan_conjecture, ClassFilter};
use toughlab_core::{parse_graph6, to_graph6, ExactRatio, Graph, GraphClass, ToughnessValue};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ratio(a: u64, b: u64) -> ExactRatio {
    ExactRatio::new(a, b).unwrap()
}

fn all(n_max: usize, class: GraphClass) -> impl Iterator<Item = Graph> {
    (1..=n_max).flat_map(move |n| graphs(n, class).unwrap())
}

fn within(start: Instant, budget: Duration, summary: String) -> Outcome {
    let took = start.elapsed();
    if took <= budget {
        Ok(format!("{summary} in {:.2}s", took.as_secs_f64()))
    } else {
        Err(format!("{summary}, but took {:.2}s > {:.0}s", took.as_secs_f64(), budget.as_secs_f64()))
    }
}

fn check_minimal(g: &Graph, expected: ExactRatio, what: &str) -> Result<(), String> {
    let tau = toughness(g);
    if tau != ToughnessValue::Finite(expected) {
        return Err(format!("{what}: τ = {tau}, expected {expected}"));
    }
    if is_minimally_tough(g) != MinimalityVerdict::MinimallyTough(expected) {
        return Err(format!("{what}: not reported minimally tough"));
    }
    let oracle = brute_minimally_tough(g).map(Frac::reduced);
    if oracle != Some((expected.num(), expected.den())) {
        return Err(format!("{what}: brute-force oracle gives {oracle:?}"));
    }
    Ok(())
}

fn wheels() -> Outcome {
    let start = Instant::now();
    for n in 5..=10u64 {
        let expected = if n % 2 == 1 { ratio(n + 1, n - 1) } else { ratio(n, n - 2) };
        check_minimal(&wheel(n as usize).unwrap(), expected, &format!("W{n}"))?;
    }
    within(start, Duration::from_secs(5), "W5..W10 exact and minimally tough".into())
}

fn stars() -> Outcome {
    let start = Instant::now();
    for l in 2..=6u64 {
        let g = star(l as usize).unwrap();
        let tau = toughness(&g);
        if tau != ToughnessValue::Finite(ratio(1, l))
            || is_minimally_tough(&g) != MinimalityVerdict::MinimallyTough(ratio(1, l))
        {
            return Err(format!("K1,{l}: τ = {tau}"));
        }
    }
    within(start, Duration::from_secs(1), "K1,2..K1,6 minimally 1/ℓ-tough".into())
}

fn matched() -> Outcome {
    let start = Instant::now();
    for k in [3u64, 4] {
        check_minimal(&matched_cliques(k as usize).unwrap(), ratio(k, 2), &format!("matched cliques k = {k}"))?;
    }
    within(start, Duration::from_secs(10), "k = 3, 4 have τ = k/2 and are minimally tough".into())
}

fn conjecture_scan() -> Outcome {
    let start = Instant::now();
    let report = scan_conjecture(8, ClassFilter::Chordal).map_err(|e| e.to_string())?;
    let scanned: Vec<usize> = report.per_n.iter().map(|c| c.scanned as usize).collect();
    if scanned != common::CONNECTED_CHORDAL_COUNTS[..8] {
        return Err(format!("scanned {scanned:?} connected chordal graphs per n"));
    }
    if !report.violations.is_empty() {
        return Err(format!("hard failure, contradicts a theorem: {:?}", report.violations));
    }
    if !report.counterexamples.is_empty() {
        return Err(format!("refutation candidates: {:?}", report.counterexamples));
    }
    // Independent recomputation on every scanned graph.
    let oracle_hits = all(8, GraphClass::Chordal)
        .filter(|g| is_connected(g) && !is_complete(g))
        .filter(|g| brute_toughness(g).is_some_and(|t| t > Frac(1, 2)))
        .filter(|g| brute_minimally_tough(g).is_some())
        .count();
    if oracle_hits != 0 {
        return Err(format!("oracle finds {oracle_hits} minimally tough chordal graphs"));
    }
    within(start, Duration::from_secs(600), format!("{} connected chordal graphs, 0 hits", report.graphs_checked))
}

fn characterization() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for g in all(6, GraphClass::All).filter(|g| is_connected(g) && !is_complete(g)) {
        let verdict = check_non_minimality_characterization(&g).map_err(|e| e.to_string())?;
        let direct_not_minimal = brute_minimally_tough(&g).is_none();
        if (verdict != CharacterizationVerdict::NoEdge) != direct_not_minimal {
            return Err(format!(
                "{}: characterization {verdict:?}, direct not minimal = {direct_not_minimal}",
                to_graph6(&g).unwrap()
            ));
        }
        checked += 1;
    }
    within(start, Duration::from_secs(300), format!("{checked} graphs, 0 disagreements"))
}

fn lemma_equivalence() -> Outcome {
    let mut edges = 0;
    for g in all(6, GraphClass::All).filter(|g| is_connected(g) && !is_complete(g)) {
        for e in g.edges() {
            let c = check_condition2_restricted(&g, e).map_err(|x| x.to_string())?;
            if !c.agree() {
                return Err(format!("{} edge {e:?}: {c:?}", to_graph6(&g).unwrap()));
            }
            edges += 1;
        }
    }
    Ok(format!("{edges} edges, 0 disagreements"))
}

fn sufficient_condition() -> Outcome {
    let mut fired = 0;
    for g in all(7, GraphClass::All).filter(|g| is_connected(g) && !is_complete(g)) {
        let Some(t) = toughness(&g).finite() else { continue };
        if let Some(e) = check_sufficient_condition(&g, t) {
            fired += 1;
            if brute_minimally_tough(&g).is_some() {
                return Err(format!("{} edge {e:?} at t = {t}, yet minimally tough", to_graph6(&g).unwrap()));
            }
        }
    }
    Ok(format!("hypothesis held on {fired} graphs, none minimally tough"))
}

/// `S` has at least two components of `G - S` adjacent to all of `S`.
fn has_two_full_components(g: &Graph, s: u64) -> bool {
    let n = g.n();
    let keep = !s & ((1u64 << n) - 1);
    let mut seen = 0u64;
    let mut full = 0;
    for v in 0..n {
        if keep >> v & 1 == 0 || seen >> v & 1 == 1 {
            continue;
        }
        let comp = g.reach(v, toughlab_core::VertexSet(keep)).bits();
        seen |= comp;
        let touched = (0..n).filter(|&x| comp >> x & 1 == 1).fold(0, |acc, x| acc | g.rows()[x]);
        if touched & s == s {
            full += 1;
        }
    }
    full >= 2
}

fn separator_oracle() -> Outcome {
    let mut checked = 0;
    for g in all(8, GraphClass::Chordal).filter(is_connected) {
        let tree = clique_tree(&g).map_err(|e| e.to_string())?;
        tree.validate(&g).map_err(|e| e.to_string())?;
        let via_tree: BTreeSet<u64> = minimal_separators_via_clique_tree(&g, &tree)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|s| s.bits())
            .collect();
        let brute: BTreeSet<u64> = (0u64..(1 << g.n())).filter(|&s| has_two_full_components(&g, s)).collect();
        let library: BTreeSet<u64> = minimal_separators(&g).iter().map(|s| s.bits()).collect();
        if via_tree != brute || library != brute {
            return Err(format!("{}: tree {via_tree:?}, brute {brute:?}", to_graph6(&g).unwrap()));
        }
        checked += 1;
    }
    Ok(format!("{checked} connected chordal graphs, 0 disagreements"))
}

fn farber_and_split() -> Outcome {
    let mut checked = 0;
    for g in all(7, GraphClass::All) {
        let greedy = simple_elimination_ordering(&g).is_some();
        let farber = is_chordal(&g) && is_sun_free(&g);
        if greedy != farber {
            return Err(format!("{}: greedy {greedy}, chordal and sun-free {farber}", to_graph6(&g).unwrap()));
        }
        let partition = split_partition(&g).is_some();
        let free = find_split_obstruction(&g).is_none();
        if partition != free || partition != brute_split(&g) {
            return Err(format!("{}: partition {partition}, obstruction-free {free}", to_graph6(&g).unwrap()));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs, 0 disagreements"))
}

fn structural() -> Outcome {
    let mut lines = Vec::new();
    for name in
        ["prop_connectivity_bound", "thm_two_moplexes", "prop_simple_moplicial", "thm_dirac", "thm_chordal_interval"]
    {
        let r = run_suite(name, Some(7)).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{name}: {:?}", r.violations));
        }
        lines.push(format!("{name} ({})", r.graphs_checked));
    }
    Ok(lines.join(", "))
}

fn stars_theorem() -> Outcome {
    let mut found = BTreeSet::new();
    for g in all(7, GraphClass::All) {
        if universal_vertices(&g).is_empty() || !is_connected(&g) {
            continue;
        }
        let Some(t) = brute_toughness(&g) else { continue };
        if t > Frac(1, 1) {
            continue;
        }
        if let Some(t) = brute_minimally_tough(&g) {
            if t.reduced() != (1, g.n() as u64 - 1) {
                return Err(format!("{} minimally tough with τ = {t:?}", to_graph6(&g).unwrap()));
            }
            found.insert(canonical_key(&g).unwrap());
        }
    }
    let stars: BTreeSet<_> = (2..=6).map(|l| canonical_key(&star(l).unwrap()).unwrap()).collect();
    if found != stars {
        return Err(format!("found {} classes, expected the {} stars", found.len(), stars.len()));
    }
    Ok("minimally tough graphs are exactly K1,2..K1,6".into())
}

fn graph6_conformance() -> Outcome {
    let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    if parse_graph6("Bw").map_err(|e| e.to_string())? != k3 {
        return Err("\"Bw\" does not decode to K3".into());
    }
    let mut checked = 0;
    for n in 1..=7 {
        let gs = graphs(n, GraphClass::All).unwrap();
        if gs.len() != common::GRAPH_COUNTS[n - 1] {
            return Err(format!("{} graphs on {n} vertices", gs.len()));
        }
        for g in gs {
            let s = to_graph6(&g).map_err(|e| e.to_string())?;
            let h = parse_graph6(&s).map_err(|e| e.to_string())?;
            if h != g || to_graph6(&h).unwrap() != s {
                return Err(format!("{s} does not round-trip"));
            }
            checked += 1;
        }
    }
    Ok(format!("\"Bw\" = K3, {checked} graphs round-trip"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("wheels", wheels),
        ("stars", stars),
        ("matched cliques", matched),
        ("chordal conjecture scan n <= 8", conjecture_scan),
        ("characterization equivalence n <= 6", characterization),
        ("restricted separator lemma n <= 6", lemma_equivalence),
        ("sufficient condition soundness n <= 7", sufficient_condition),
        ("clique-tree separator oracle n <= 8", separator_oracle),
        ("Farber and split biconditionals n <= 7", farber_and_split),
        ("structural propositions n <= 7", structural),
        ("stars theorem n <= 7", stars_theorem),
        ("graph6 conformance n <= 7", graph6_conformance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
