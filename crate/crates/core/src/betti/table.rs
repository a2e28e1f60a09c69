use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::face::Face;

/// Multigraded Betti numbers `β_{i,W}(I)` of an ideal, indexed by the
/// homological degree of `I` (so `β_{i,W}(I) = β_{i+1,W}(S/I)`).
/// Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    n: u32,
    entries: BTreeMap<(usize, Face), u64>,
}

/// Signed entrywise difference of two tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDelta {
    pub entries: BTreeMap<(usize, Face), i64>,
}

impl BettiDelta {
    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|&v| v == 0)
    }

    pub fn add(&mut self, i: usize, w: Face, v: i64) {
        let e = self.entries.entry((i, w)).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&(i, w));
        }
    }
}

impl BettiTable {
    pub fn new(n: u32) -> Self {
        BettiTable { n, entries: BTreeMap::new() }
    }

    pub fn from_entries(n: u32, entries: impl IntoIterator<Item = ((usize, Face), u64)>) -> Self {
        let mut t = Self::new(n);
        for ((i, w), c) in entries {
            t.add(i, w, c);
        }
        t
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, w: Face) -> u64 {
        self.entries.get(&(i, w)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, w: Face, count: u64) {
        if count > 0 {
            *self.entries.entry((i, w)).or_insert(0) += count;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Face, u64)> + '_ {
        self.entries.iter().map(|(&(i, w), &c)| (i, w, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Graded numbers `β_{i,j}(I) = Σ_{|W| = j} β_{i,W}(I)`.
    pub fn graded(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (i, w, c) in self.entries() {
            *out.entry((i, w.len())).or_insert(0) += c;
        }
        out
    }

    pub fn graded_entry(&self, i: usize, j: usize) -> u64 {
        self.entries().filter(|(a, w, _)| *a == i && w.len() == j).map(|(_, _, c)| c).sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max{j - i : β_{i,j}(I) ≠ 0}`; `None` for the zero ideal.
    pub fn reg(&self) -> Option<usize> {
        self.entries().map(|(i, w, _)| w.len() - i).max()
    }

    /// `reg(S/I) = reg(I) - 1`.
    pub fn reg_quotient(&self) -> Option<usize> {
        self.reg().map(|r| r - 1)
    }

    /// `pd(S/I) = 1 + max i`; zero for the zero ideal.
    pub fn pd_quotient(&self) -> usize {
        self.max_index().map_or(0, |i| i + 1)
    }

    /// `t_i = max{j : β_{i,j}(S/I) ≠ 0}` for `0 ≤ i ≤ pd(S/I)`, `None` where the module vanishes.
    pub fn t_vector_quotient(&self) -> Vec<Option<usize>> {
        let pd = self.pd_quotient();
        let mut t = vec![None; pd + 1];
        t[0] = Some(0);
        for (i, w, _) in self.entries() {
            let slot = &mut t[i + 1];
            *slot = Some(slot.map_or(w.len(), |x: usize| x.max(w.len())));
        }
        t
    }

    /// `r_i = t_i - i`.
    pub fn r_vector_quotient(&self) -> Vec<Option<i64>> {
        self.t_vector_quotient().iter().enumerate().map(|(i, t)| t.map(|t| t as i64 - i as i64)).collect()
    }

    /// `β_{i,i+d}(I)` for `i = 0..=max index`.
    pub fn linear_strand(&self, d: usize) -> Vec<u64> {
        let Some(top) = self.max_index() else { return Vec::new() };
        let mut v: Vec<u64> = (0..=top).map(|i| self.graded_entry(i, i + d)).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Entries with `|W| - i > d`.
    pub fn above_strand(&self, d: usize) -> BTreeMap<(usize, Face), u64> {
        self.entries.iter().filter(|((i, w), _)| w.len() > i + d).map(|(k, v)| (*k, *v)).collect()
    }

    /// True iff every entry sits at `|W| = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries().all(|(i, w, _)| w.len() == i + d)
    }

    /// `self - other`, entrywise.
    pub fn delta_from(&self, other: &BettiTable) -> BettiDelta {
        let mut d = BettiDelta::default();
        for (i, w, c) in self.entries() {
            d.add(i, w, c as i64);
        }
        for (i, w, c) in other.entries() {
            d.add(i, w, -(c as i64));
        }
        d
    }

    /// Adds a signed delta; `None` if some entry would turn negative.
    pub fn apply_delta(&self, delta: &BettiDelta) -> Option<BettiTable> {
        let mut out = self.clone();
        for (&(i, w), &v) in &delta.entries {
            let cur = out.get(i, w) as i64 + v;
            if cur < 0 {
                return None;
            }
            if cur == 0 {
                out.entries.remove(&(i, w));
            } else {
                out.entries.insert((i, w), cur as u64);
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn veronese_table() -> BettiTable {
        // I(C_{3,2}): three edges, two first syzygies in degree 3
        BettiTable::from_entries(
            3,
            [
                ((0, Face::of(&[1, 2])), 1),
                ((0, Face::of(&[1, 3])), 1),
                ((0, Face::of(&[2, 3])), 1),
                ((1, Face::of(&[1, 2, 3])), 2),
            ],
        )
    }

    #[test]
    fn derived_invariants() {
        let t = veronese_table();
        assert_eq!(t.reg(), Some(2));
        assert_eq!(t.pd_quotient(), 2);
        assert_eq!(t.linear_strand(2), vec![3, 2]);
        assert_eq!(t.t_vector_quotient(), vec![Some(0), Some(2), Some(3)]);
        assert_eq!(t.r_vector_quotient(), vec![Some(0), Some(1), Some(1)]);
        assert!(t.is_linear(2));
    }

    #[test]
    fn zero_table() {
        let t = BettiTable::new(4);
        assert_eq!(t.reg(), None);
        assert_eq!(t.pd_quotient(), 0);
        assert!(t.linear_strand(2).is_empty());
    }

    #[test]
    fn deltas_round_trip() {
        let t = veronese_table();
        let z = BettiTable::new(3);
        let d = t.delta_from(&z);
        assert_eq!(z.apply_delta(&d).unwrap(), t);
        assert!(t.delta_from(&t).is_zero());
        assert!(z.apply_delta(&z.delta_from(&t)).is_none());
    }
}
