//! Fixed-width vertex sets.
//!
//! Vertices are labelled `1..=64`; label `v` lives in bit `v - 1`. Every face,
//! facet, cover and generator support in the crate is a [`VertexSet`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Vertex label. Labels start at 1.
pub type VertexId = u32;

/// Largest label a [`VertexSet`] can hold.
pub const MAX_VERTEX: VertexId = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTEX as usize, "at most {MAX_VERTEX} vertices");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(Self::bit(v))
    }

    fn bit(v: VertexId) -> u64 {
        assert!(
            (1..=MAX_VERTEX).contains(&v),
            "vertex label {v} outside 1..={MAX_VERTEX}"
        );
        1u64 << (v - 1)
    }

    pub fn contains(self, v: VertexId) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= Self::bit(v);
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !Self::bit(v);
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | Self::bit(v))
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !Self::bit(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: VertexSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn min(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        self.next = if current == self.mask {
            None
        } else {
            Some((current.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(current))
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<'a> FromIterator<&'a VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a VertexId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Smaller sets first, ties broken by comparing member lists lexicographically.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<VertexId>::deserialize(deserializer)?;
        let mut set = VertexSet::EMPTY;
        for v in members {
            if !(1..=MAX_VERTEX).contains(&v) {
                return Err(serde::de::Error::custom(format!(
                    "vertex label {v} outside 1..={MAX_VERTEX}"
                )));
            }
            if set.contains(v) {
                return Err(serde::de::Error::custom(format!("duplicate vertex {v}")));
            }
            set.insert(v);
        }
        Ok(set)
    }
}
