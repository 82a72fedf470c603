//! Canonical labeling for small graphs.
//!
//! Ordered-partition refinement (neighbor counts per cell) followed by
//! individualization of the first non-singleton cell. Every discrete leaf of
//! the search tree yields a labeling; the canonical one minimizes the packed
//! upper-triangle code. Vertices of the target cell that are twins
//! (`N(x) - y == N(y) - x`) are swapped by an automorphism fixing the current
//! partition, so only one of them is branched on.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

pub const MAX_CANON_VERTICES: usize = 10;

/// Isomorphism-invariant key: the vertex count and the canonical upper-triangle
/// code, with `x(0,1)` in the most significant position so that numeric order is
/// graph6 lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    pub n: u8,
    pub code: u64,
}

impl CanonKey {
    /// The canonically labeled graph this key encodes.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let m = n * (n - 1) / 2;
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (m - 1 - k) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(adj)
    }
}

/// Packs the upper triangle of `g` relabeled by `perm` (new vertex `i` is old `perm[i]`).
pub(crate) fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..perm.len() {
        let row = g.rows()[perm[j]];
        for &p in &perm[..j] {
            code = code << 1 | (row >> p & 1);
        }
    }
    code
}

fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let adj = g.rows();
    let mut scratch: Vec<(u64, usize)> = Vec::with_capacity(g.n());
    loop {
        let mut next = Vec::with_capacity(g.n());
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            scratch.clear();
            let mut bits = cell;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut sig = 0u64;
                for &c in cells.iter() {
                    sig = sig << 4 | (adj[v] & c).count_ones() as u64;
                }
                scratch.push((sig, v));
            }
            scratch.sort_unstable();
            let mut run = 0u64;
            let mut run_sig = scratch[0].0;
            for &(sig, v) in scratch.iter() {
                if sig != run_sig {
                    next.push(run);
                    run = 0;
                    run_sig = sig;
                }
                run |= 1 << v;
            }
            next.push(run);
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>) {
        refine(self.g, &mut cells);
        let n = self.g.n();
        if cells.len() == n {
            let perm: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = code_under(self.g, &perm);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, perm));
            }
            return;
        }
        let target = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let cell = cells[target];
        let adj = self.g.rows();
        let mut reps: u64 = 0;
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut r = reps;
            let mut is_twin = false;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                if adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                    is_twin = true;
                    break;
                }
            }
            if is_twin {
                continue;
            }
            reps |= 1 << v;
            let mut split = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target]);
            split.push(1 << v);
            split.push(cell & !(1 << v));
            split.extend_from_slice(&cells[target + 1..]);
            self.run(split);
        }
    }
}

fn check_bound(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANON_VERTICES {
        Err(Error::TooLarge { what: "canonical labeling", max: MAX_CANON_VERTICES, n: g.n() })
    } else {
        Ok(())
    }
}

/// A canonical ordering of the vertices: relabeling `g` by it yields the same
/// graph for every member of the isomorphism class.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_bound(g)?;
    let mut search = Search { g, best: None };
    search.run(vec![g.vertices().bits()]);
    Ok(search.best.expect("at least one leaf").1)
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey> {
    let perm = canonical_labeling(g)?;
    Ok(CanonKey { n: g.n() as u8, code: code_under(g, &perm) })
}

/// Label-invariant byte string: the graph6 encoding of the canonical relabeling.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let key = canonical_key(g)?;
    Ok(to_graph6(&key.to_graph())?.into_bytes())
}
