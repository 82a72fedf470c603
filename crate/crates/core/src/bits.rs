use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of vertex indices `0..64`, stored as one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// Vertices strictly greater than `v`.
    #[inline]
    pub const fn above(v: usize) -> Self {
        VertexSet(!(2u64 << v).wrapping_sub(1))
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing numeric order, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets { universe: self.0, next: Some(0) }
    }

    /// All subsets of `self` with exactly `k` members.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        let members = self.to_vec();
        let n = members.len();
        let mut combo = if k <= n { Some((1u64 << k).wrapping_sub(1)) } else { None };
        if k == 64 {
            combo = Some(u64::MAX);
        }
        std::iter::from_fn(move || {
            let c = combo?;
            if n < 64 && c >> n != 0 {
                return None;
            }
            // Gosper's hack on the compressed index space.
            combo = if c == 0 {
                None
            } else {
                let low = c & c.wrapping_neg();
                let ripple = c.wrapping_add(low);
                if ripple == 0 {
                    None
                } else {
                    Some((((ripple ^ c) >> 2) / low) | ripple)
                }
            };
            let mut out = 0u64;
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                out |= 1u64 << members[i];
                bits &= bits - 1;
            }
            Some(VertexSet(out))
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Subsets of a fixed universe, enumerated with the `(s - u) & u` trick.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.universe) & self.universe;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(VertexSet(cur))
    }
}
