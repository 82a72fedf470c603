use std::fmt;

use crate::bits::VertexSet;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on at most 64 vertices.
///
/// Row `i` of the adjacency is the bitmask of neighbors of vertex `i`. Rows are
/// symmetric, irreflexive, and carry no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, rejecting rows that break the invariants.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        check_order(rows.len())?;
        let g = Graph { adj: rows };
        let n = g.n();
        let mask = VertexSet::full(n).bits();
        for (i, &row) in g.adj.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> i & 1 == 1 {
                return Err(Error::SelfLoop(i));
            }
            for j in VertexSet(row) {
                if g.adj[j] >> i & 1 == 0 {
                    return Err(Error::NotAnEdge(j, i));
                }
            }
        }
        Ok(g)
    }

    /// Unchecked constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { adj: rows }
    }

    /// Re-checks symmetry, irreflexivity and the high-bit invariant.
    pub fn is_valid(&self) -> bool {
        Graph::from_rows(self.adj.clone()).is_ok()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).intersection(VertexSet::above(u)).iter().map(move |v| (u, v)))
    }

    /// Union of the open neighborhoods of `set`, minus `set` itself.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        let mut out = 0;
        for v in set {
            out |= self.adj[v];
        }
        VertexSet(out).difference(set)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(VertexSet::EMPTY) == 1
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { adj }
    }

    /// The subgraph induced by `keep`, with vertices renumbered `0..|keep|` in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut adj = vec![0u64; order.len()];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { adj }
    }

    /// The graph whose vertex `i` is vertex `perm[i]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut pos = vec![0usize; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            pos[p] = i;
        }
        let adj = perm.iter().map(|&p| VertexSet(self.adj[p]).iter().fold(0u64, |acc, w| acc | 1 << pos[w])).collect();
        Graph { adj }
    }

    /// Vertices reachable from `start` without leaving `within`.
    #[inline]
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= self.adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Connected components of `G - removed`, ordered by least vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertices().difference(removed);
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    /// `ω(G - removed)`.
    #[inline]
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut rest = self.vertices().difference(removed);
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest = rest.difference(self.reach(v, rest));
            count += 1;
        }
        count
    }

    /// Whether `u` and `v` lie in different components of `G - removed`.
    #[inline]
    pub fn separates(&self, removed: VertexSet, u: usize, v: usize) -> bool {
        let rest = self.vertices().difference(removed);
        !self.reach(u, rest).contains(v)
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount(n))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
