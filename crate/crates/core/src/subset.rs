//! Membership bitmaps over the elements of a ring.

use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::ring::RingId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetTag {
    Plain,
    RightIdeal,
    LeftIdeal,
    TwoSidedIdeal,
}

/// A set of element indices (canonical order) of one ring.
///
/// Equality and hashing look at the ring and the members only, not the tag.
#[derive(Debug, Clone)]
pub struct ElementSubset {
    ring: RingId,
    len: u64,
    words: Vec<u64>,
    count: u64,
    tag: SubsetTag,
}

impl ElementSubset {
    pub fn empty(ring: RingId, len: u64) -> Self {
        ElementSubset {
            ring,
            len,
            words: vec![0; len.div_ceil(64) as usize],
            count: 0,
            tag: SubsetTag::Plain,
        }
    }

    pub fn full(ring: RingId, len: u64) -> Self {
        let mut s = Self::empty(ring, len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(ring: RingId, len: u64, indices: impl IntoIterator<Item = u64>) -> Self {
        let mut s = Self::empty(ring, len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn tagged(mut self, tag: SubsetTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn tag(&self) -> SubsetTag {
        self.tag
    }

    /// Size of the ambient element space.
    pub fn universe(&self) -> u64 {
        self.len
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn insert(&mut self, i: u64) -> bool {
        assert!(i < self.len, "index {i} outside subset universe {}", self.len);
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.count += 1;
        }
        fresh
    }

    pub fn contains(&self, i: u64) -> bool {
        i < self.len && self.words[(i / 64) as usize] & (1 << (i % 64)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                Some(w as u64 * 64 + b)
            })
        })
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.len == other.len
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        assert_eq!(self.len, other.len, "subsets of different universes");
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let count = words.iter().map(|w| w.count_ones() as u64).sum();
        ElementSubset {
            ring: self.ring,
            len: self.len,
            words,
            count,
            tag: SubsetTag::Plain,
        }
    }

    /// Only `{0}`: the zero element is index 0.
    pub fn is_zero_ideal(&self) -> bool {
        self.count == 1 && self.contains(0)
    }
}

impl PartialEq for ElementSubset {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.len == other.len && self.words == other.words
    }
}

impl Eq for ElementSubset {}

impl Hash for ElementSubset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.len.hash(state);
        self.words.hash(state);
    }
}
