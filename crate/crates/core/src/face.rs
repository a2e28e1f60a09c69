//! Vertex subsets of `[n]`, stored as bitmasks.
//!
//! A [`Face`] doubles as a square-free multidegree: the monomial `x_F` is the
//! product of the variables indexed by `F`, and for square-free ideals every
//! nonzero multigraded Betti number lives in such a degree.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: u32 = 64;

/// A subset of `{1, ..., 64}`. Vertex `v` is bit `v - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn empty() -> Self {
        Face(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    /// The full vertex set `[n]`.
    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_VERTICES, "ground set larger than {MAX_VERTICES}");
        if n == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: u32) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        Face(1u64 << (v - 1))
    }

    /// Builds a face from 1-based vertices. Repeated vertices are rejected.
    pub fn from_vertices(vertices: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if !(1..=MAX_VERTICES).contains(&v) {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            let b = 1u64 << (v - 1);
            if bits & b != 0 {
                return Err(Error::RepeatedVertex(v));
            }
            bits |= b;
        }
        Ok(Face(bits))
    }

    /// Like [`Face::from_vertices`] but panics on bad input. Meant for literals.
    pub fn of(vertices: &[u32]) -> Self {
        Self::from_vertices(vertices).expect("invalid face literal")
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: Face) -> bool {
        self.is_subset(other) && self != other
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

    #[inline]
    pub fn with(self, v: u32) -> Face {
        self.union(Face::singleton(v))
    }

    #[inline]
    pub fn without(self, v: u32) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Largest vertex, `m(x_F)` in monomial language.
    pub fn max_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros())
        }
    }

    pub fn min_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn vertices(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` elements, in increasing bitmask order.
    pub fn subsets_of_size(self, k: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, k)
    }

    /// All subsets of `self`, the empty set first.
    pub fn subsets(self) -> Subsets {
        Subsets { set: self.0, next: Some(0) }
    }
}

impl Ord for Face {
    /// Lexicographic order on increasing vertex lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<u32> = Vec::deserialize(d)?;
        Face::from_vertices(&v).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<u32> for Face {
    /// Panics on out-of-range vertices; duplicates collapse.
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        iter.into_iter().fold(Face::EMPTY, |f, v| f.with(v))
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

/// Carry-rippler enumeration of the subsets of a mask.
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.set) & self.set;
        self.next = if nxt == 0 { None } else { Some(nxt) };
        Some(Face(cur))
    }
}

/// Fixed-size subsets of a mask: Gosper's hack on positions, then scattered
/// back onto the mask's bits.
pub struct SubsetsOfSize {
    positions: Vec<u32>,
    k: usize,
    state: Option<u64>,
}

impl SubsetsOfSize {
    fn new(set: Face, k: usize) -> Self {
        let positions: Vec<u32> = set.iter().map(|v| v - 1).collect();
        let m = positions.len();
        let state = if k > m {
            None
        } else if k == 0 {
            Some(0)
        } else if k == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << k) - 1)
        };
        SubsetsOfSize { positions, k, state }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let s = self.state?;
        let mut bits = 0u64;
        let mut rest = s;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            bits |= 1u64 << self.positions[p];
            rest &= rest - 1;
        }
        let m = self.positions.len();
        self.state = if self.k == 0 {
            None
        } else {
            let c = s & s.wrapping_neg();
            let r = s.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ s) >> 2) / c) | r;
                if m < 64 && next >> m != 0 {
                    None
                } else {
                    Some(next)
                }
            }
        };
        Some(Face(bits))
    }
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}

/// Removes every face that strictly contains another one, returning a sorted antichain.
pub fn minimalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| (f.len(), *f));
    faces.dedup();
    let mut out: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !out.iter().any(|g| g.is_subset(f)) {
            out.push(f);
        }
    }
    out.sort();
    out
}

/// Keeps only inclusion-maximal faces, sorted.
pub fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| (std::cmp::Reverse(f.len()), *f));
    faces.dedup();
    let mut out: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !out.iter().any(|g| f.is_subset(*g)) {
            out.push(f);
        }
    }
    out.sort();
    out
}
