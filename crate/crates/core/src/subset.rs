//! Vertex subsets as bit sets.

use std::fmt;

/// Largest order a [`VertexSubset`] can address.
pub const HARD_MAX_VERTICES: usize = 30;

/// A subset of `{0, .., n-1}` stored as a bit mask. Bit `v` is set iff `v`
/// is a member.
///
/// The mask doubles as the table index of the subset, so subset tables are
/// addressed in O(1) without an explicit position map.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSubset(u32);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSubset(bits)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(n <= HARD_MAX_VERTICES, "order {n} exceeds {HARD_MAX_VERTICES}");
        VertexSubset(((1u64 << n) - 1) as u32)
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < HARD_MAX_VERTICES);
        VertexSubset(1 << v)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
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
        v < 32 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSubset(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSubset(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSubset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSubset(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset_of(self, other: Self) -> bool {
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

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSubset::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSubset {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSubset`].
#[derive(Clone, Debug)]
pub struct Members(u32);

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
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// All `k`-element subsets of `{0, .., n-1}` in increasing mask order
/// (Gosper's hack).
#[derive(Clone, Debug)]
pub struct SubsetsOfSize {
    next: Option<u64>,
    limit: u64,
}

impl SubsetsOfSize {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= HARD_MAX_VERTICES);
        let next = if k > n { None } else { Some((1u64 << k) - 1) };
        SubsetsOfSize {
            next,
            limit: 1u64 << n,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSubset;

    fn next(&mut self) -> Option<VertexSubset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ)
        };
        Some(VertexSubset(cur as u32))
    }
}

/// Every nonempty subset of `{0, .., n-1}`, grouped by descending
/// cardinality. Any superset is yielded before each of its proper subsets.
pub fn nonempty_subsets_descending(n: usize) -> impl Iterator<Item = VertexSubset> {
    (1..=n).rev().flat_map(move |k| SubsetsOfSize::new(n, k))
}
