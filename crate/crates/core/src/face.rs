//! Faces as fixed-width bitsets over a ground set of at most 128 elements.

use std::fmt;

use crate::error::{invalid, Result};

/// Largest ground set a [`Face`] can index.
pub const MAX_GROUND: usize = 128;

/// A simplex, stored as the set of ground elements (graph edge indices) it contains.
///
/// Ordering is by the underlying integer value, which is the order faces are
/// stored in within a dimension.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_GROUND);
        Face(1u128 << i)
    }

    /// Builds a face from element indices; duplicates collapse.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u128;
        for i in indices {
            if i >= MAX_GROUND {
                return invalid(format!("element {i} exceeds the {MAX_GROUND}-bit face width"));
            }
            bits |= 1u128 << i;
        }
        Ok(Face(bits))
    }

    pub fn full(ground: usize) -> Self {
        debug_assert!(ground <= MAX_GROUND);
        if ground == MAX_GROUND {
            Face(u128::MAX)
        } else {
            Face((1u128 << ground) - 1)
        }
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        Face(self.0 | 1u128 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        Face(self.0 & !(1u128 << i))
    }

    #[inline]
    pub fn toggle(self, i: usize) -> Self {
        Face(self.0 ^ 1u128 << i)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|σ| - 1`; the empty face has dimension −1.
    #[inline]
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Highest element index plus one, or 0 for the empty face.
    pub fn span(self) -> usize {
        MAX_GROUND - self.0.leading_zeros() as usize
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// Codimension-one faces, in order of the removed element.
    pub fn facets(self) -> impl Iterator<Item = Face> {
        self.iter().map(move |i| self.without(i))
    }

    /// Lowercase hexadecimal without prefix; the empty face is `0`.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 32 || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return invalid(format!("malformed hex face {s:?}"));
        }
        u128::from_str_radix(s, 16)
            .map(Face)
            .or_else(|_| invalid(format!("malformed hex face {s:?}")))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

impl FromIterator<usize> for Face {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Face::EMPTY, Face::with)
    }
}
