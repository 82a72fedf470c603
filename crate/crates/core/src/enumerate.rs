//! One representative per isomorphism class of small graphs.
//!
//! General graphs come from an edge-mask sweep for `n <= 6` and from
//! one-vertex augmentation (every neighborhood subset) above that. Chordal
//! graphs are grown by attaching a new vertex to a clique, which reverses a
//! perfect elimination ordering and so reaches every chordal graph.
//! Candidates are deduplicated by [`canonical_key`] and emitted in increasing
//! key order, each in its canonical labeling.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::bits::VertexSet;
use crate::canon::{canonical_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_VERTICES: usize = 9;
const SWEEP_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    All,
    Chordal,
}

type Cell = Arc<OnceLock<Arc<Vec<CanonKey>>>>;

fn cache() -> &'static Mutex<HashMap<(usize, GraphClass), Cell>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, GraphClass), Cell>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange { name: "n", value: n, min: 1, max: MAX_ENUMERATION_VERTICES })
    }
}

/// Sorted canonical keys of every isomorphism class on `n` vertices in `class`.
pub fn class_keys(n: usize, class: GraphClass) -> Result<Arc<Vec<CanonKey>>> {
    check_n(n)?;
    let cell = cache().lock().expect("enumeration cache poisoned").entry((n, class)).or_default().clone();
    Ok(cell.get_or_init(|| Arc::new(generate(n, class))).clone())
}

fn generate(n: usize, class: GraphClass) -> Vec<CanonKey> {
    if n == 1 {
        return vec![CanonKey { n: 1, code: 0 }];
    }
    let mut keys: Vec<CanonKey> = match class {
        GraphClass::All if n <= SWEEP_LIMIT => {
            let m = n * (n - 1) / 2;
            (0u64..1 << m).into_par_iter().map(|mask| canonical_key(&from_mask(n, mask)).unwrap()).collect()
        }
        GraphClass::All => {
            let parents = class_keys(n - 1, class).expect("n - 1 in range");
            parents
                .par_iter()
                .flat_map_iter(|p| {
                    let g = p.to_graph();
                    VertexSet::full(n - 1).subsets().map(move |nb| canonical_key(&attach(&g, nb)).unwrap())
                })
                .collect()
        }
        GraphClass::Chordal => {
            let parents = class_keys(n - 1, class).expect("n - 1 in range");
            parents
                .par_iter()
                .flat_map_iter(|p| {
                    let g = p.to_graph();
                    let mut out = Vec::new();
                    for_each_clique(&g, |c| out.push(canonical_key(&attach(&g, c)).unwrap()));
                    out
                })
                .collect()
        }
    };
    keys.par_sort_unstable();
    keys.dedup();
    keys
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(adj)
}

/// `g` plus a new last vertex adjacent to `nb`.
fn attach(g: &Graph, nb: VertexSet) -> Graph {
    let n = g.n();
    let mut adj = g.rows().to_vec();
    for v in nb {
        adj[v] |= 1 << n;
    }
    adj.push(nb.bits());
    Graph::from_rows_unchecked(adj)
}

/// Calls `f` on every clique of `g`, including the empty one.
pub(crate) fn for_each_clique(g: &Graph, mut f: impl FnMut(VertexSet)) {
    fn go(g: &Graph, clique: VertexSet, cand: VertexSet, f: &mut dyn FnMut(VertexSet)) {
        f(clique);
        for v in cand {
            let later = cand.intersection(VertexSet::above(v));
            go(g, clique.with(v), later.intersection(g.neighbors(v)), f);
        }
    }
    go(g, VertexSet::EMPTY, g.vertices(), &mut f);
}

/// Every class representative on `n` vertices in `class`, in canonical key order.
pub fn graphs(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    Ok(class_keys(n, class)?.iter().map(|k| k.to_graph()).collect())
}

/// Feeds each representative passing `filter` to `consumer`, serially and in
/// key order. Returns the number emitted.
pub fn enumerate_graphs(
    n: usize,
    class: GraphClass,
    filter: impl Fn(&Graph) -> bool,
    mut consumer: impl FnMut(&Graph),
) -> Result<usize> {
    let keys = class_keys(n, class)?;
    let mut count = 0;
    for key in keys.iter() {
        let g = key.to_graph();
        if filter(&g) {
            consumer(&g);
            count += 1;
        }
    }
    Ok(count)
}

/// Like [`enumerate_graphs`], but `filter` and `consumer` run concurrently on
/// the rayon pool, in no particular order.
pub fn par_enumerate_graphs(
    n: usize,
    class: GraphClass,
    filter: impl Fn(&Graph) -> bool + Sync,
    consumer: impl Fn(&Graph) + Sync,
) -> Result<usize> {
    let keys = class_keys(n, class)?;
    Ok(keys
        .par_iter()
        .filter_map(|key| {
            let g = key.to_graph();
            filter(&g).then(|| consumer(&g))
        })
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn count(n: usize, class: GraphClass, filter: impl Fn(&Graph) -> bool) -> usize {
        enumerate_graphs(n, class, filter, |_| {}).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(3, GraphClass::All, |_| true), 4);
        assert_eq!(count(4, GraphClass::All, Graph::is_connected), 6);
        assert_eq!(count(4, GraphClass::Chordal, Graph::is_connected), 5);
    }

    #[test]
    fn connected_counts_match_independent_sweep() {
        // The sweep dedups by brute-force minimum over all permutations, a
        // labeling independent of the refinement search.
        for n in 1..=6usize {
            let m = n * (n - 1) / 2;
            let perms = permutations(n);
            let mut seen = HashSet::new();
            for mask in 0u64..1 << m {
                let g = from_mask(n, mask);
                if !g.is_connected() {
                    continue;
                }
                let min = perms.iter().map(|p| crate::canon::code_under(&g, p)).min().unwrap();
                seen.insert(min);
            }
            assert_eq!(count(n, GraphClass::All, Graph::is_connected), seen.len(), "n = {n}");
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        fn go(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(p.clone());
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                go(p, k + 1, out);
                p.swap(k, i);
            }
        }
        go(&mut p, 0, &mut out);
        out
    }

    #[test]
    fn emission_is_sorted_and_valid() {
        let mut last = None;
        enumerate_graphs(
            5,
            GraphClass::All,
            |_| true,
            |g| {
                assert!(g.is_valid());
                let key = canonical_key(g).unwrap();
                assert!(last < Some(key));
                last = Some(key);
            },
        )
        .unwrap();
    }

    #[test]
    fn parallel_agrees_with_serial() {
        use std::sync::atomic::{AtomicUsize, Ordering};
        let hits = AtomicUsize::new(0);
        let c = par_enumerate_graphs(6, GraphClass::Chordal, Graph::is_connected, |_| {
            hits.fetch_add(1, Ordering::Relaxed);
        })
        .unwrap();
        assert_eq!(c, hits.load(Ordering::Relaxed));
        assert_eq!(c, count(6, GraphClass::Chordal, Graph::is_connected));
    }

    #[test]
    fn bounds() {
        assert!(class_keys(0, GraphClass::All).is_err());
        assert!(class_keys(10, GraphClass::Chordal).is_err());
    }

    #[test]
    fn cliques_of_triangle_plus_pendant() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let mut all = Vec::new();
        for_each_clique(&g, |c| all.push(c));
        // empty, 4 singletons, 4 edges, 1 triangle
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|&c| g.is_clique(c)));
    }
}
