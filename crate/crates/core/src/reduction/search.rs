//! Witness searches: simplicial subclutters and chordality.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::reduction::{RemovalSequence, RemovalStep};
use crate::{SearchOutcome, DEFAULT_SEARCH_BUDGET};

type Bits = Vec<u64>;

fn has(bits: &[u64], k: usize) -> bool {
    bits[k / 64] >> (k % 64) & 1 == 1
}

fn flip(bits: &mut [u64], k: usize) {
    bits[k / 64] ^= 1 << (k % 64);
}

/// Lexicographically smallest `(d-1)`-subset of `f` simplicial over `c`.
fn simplicial_subset(c: &UniformClutter, f: Face) -> Option<Face> {
    let mut subs: Vec<Face> = f.subsets_of_size(c.d() - 1).collect();
    subs.sort();
    subs.into_iter().find(|e| c.is_clique(c.neighborhood_unchecked(*e)))
}

pub fn subclutter_search(c: &UniformClutter, d: &UniformClutter) -> Result<SearchOutcome<RemovalSequence>> {
    subclutter_search_with_budget(c, d, DEFAULT_SEARCH_BUDGET)
}

/// Decides whether `d` is a simplicial subclutter of `c` by trying orders of
/// single-circuit removals over `c ∖ d`. Failed removed-sets are memoized.
pub fn subclutter_search_with_budget(
    c: &UniformClutter,
    d: &UniformClutter,
    budget: usize,
) -> Result<SearchOutcome<RemovalSequence>> {
    if c.n() != d.n() || c.d() != d.d() || !d.is_subclutter_of(c) {
        return Err(Error::Mismatch);
    }
    let targets: Vec<Face> = c.circuits().iter().copied().filter(|f| !d.contains(*f)).collect();
    let mut s = SubSearch { targets: &targets, failed: HashSet::new(), budget, explored: 0 };
    let mut removed = vec![0u64; targets.len().div_ceil(64).max(1)];
    let mut steps = Vec::new();
    let outcome = match s.dfs(c.clone(), &mut removed, &mut steps, 0) {
        Flow::Found => SearchOutcome::Found(RemovalSequence::new(c.clone(), steps)),
        Flow::Dead => {
            SearchOutcome::Refuted { reason: "no order of single-circuit simplicial removals reaches the subclutter".into() }
        }
        Flow::Budget => SearchOutcome::Unknown { explored: s.explored },
    };
    Ok(outcome)
}

enum Flow {
    Found,
    Dead,
    Budget,
}

struct SubSearch<'a> {
    targets: &'a [Face],
    failed: HashSet<Bits>,
    budget: usize,
    explored: usize,
}

impl SubSearch<'_> {
    fn dfs(&mut self, cur: UniformClutter, removed: &mut Bits, steps: &mut Vec<RemovalStep>, depth: usize) -> Flow {
        if depth == self.targets.len() {
            return Flow::Found;
        }
        if self.failed.contains(removed) {
            return Flow::Dead;
        }
        if self.explored >= self.budget {
            return Flow::Budget;
        }
        self.explored += 1;
        for (k, &f) in self.targets.iter().enumerate() {
            if has(removed, k) {
                continue;
            }
            let Some(e) = simplicial_subset(&cur, f) else { continue };
            flip(removed, k);
            steps.push(RemovalStep::new(e, vec![f]));
            match self.dfs(cur.without_circuits(&[f]), removed, steps, depth + 1) {
                Flow::Dead => {}
                other => return other,
            }
            steps.pop();
            flip(removed, k);
        }
        self.failed.insert(removed.clone());
        Flow::Dead
    }
}

/// Which reading of "reducible to ∅" to search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordalMode {
    /// Iterated deletion `C ∖ e` at simplicial maximal subcircuits.
    Deletion,
    /// `∅` is a simplicial subclutter of `C`.
    EmptySubclutter,
}

pub fn chordality_search(c: &UniformClutter, mode: ChordalMode) -> SearchOutcome<RemovalSequence> {
    chordality_search_with_budget(c, mode, DEFAULT_SEARCH_BUDGET)
}

/// In deletion mode each witness step removes every circuit through `e`.
pub fn chordality_search_with_budget(c: &UniformClutter, mode: ChordalMode, budget: usize) -> SearchOutcome<RemovalSequence> {
    match mode {
        ChordalMode::EmptySubclutter => {
            let empty = UniformClutter::empty(c.n(), c.d()).expect("same ground set as c");
            subclutter_search_with_budget(c, &empty, budget).expect("empty clutter is a subclutter")
        }
        ChordalMode::Deletion => {
            if !c.is_empty() && c.simplicial_maximal_subcircuits().is_empty() {
                return SearchOutcome::Refuted { reason: "no simplicial maximal subcircuit at step 0".into() };
            }
            let mut s = DelSearch { failed: HashSet::new(), budget, explored: 0 };
            let mut steps = Vec::new();
            match s.dfs(c, &mut steps) {
                Flow::Found => SearchOutcome::Found(RemovalSequence::new(c.clone(), steps)),
                Flow::Dead => SearchOutcome::Refuted { reason: "every simplicial order gets stuck before ∅".into() },
                Flow::Budget => SearchOutcome::Unknown { explored: s.explored },
            }
        }
    }
}

struct DelSearch {
    failed: HashSet<Vec<Face>>,
    budget: usize,
    explored: usize,
}

impl DelSearch {
    fn dfs(&mut self, cur: &UniformClutter, steps: &mut Vec<RemovalStep>) -> Flow {
        if cur.is_empty() {
            return Flow::Found;
        }
        if self.failed.contains(cur.circuits()) {
            return Flow::Dead;
        }
        if self.explored >= self.budget {
            return Flow::Budget;
        }
        self.explored += 1;
        for e in cur.simplicial_maximal_subcircuits() {
            steps.push(RemovalStep::new(e, cur.circuits_containing(e)));
            match self.dfs(&cur.deletion(e), steps) {
                Flow::Dead => {}
                other => return other,
            }
            steps.pop();
        }
        self.failed.insert(cur.circuits().to_vec());
        Flow::Dead
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::verify_removal_sequence;

    fn clutter(n: u32, d: usize, c: &[&[u32]]) -> UniformClutter {
        UniformClutter::new(n, d, c.iter().map(|f| Face::of(f)).collect()).unwrap()
    }

    fn figure1_c() -> UniformClutter {
        clutter(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 5], &[1, 2, 6], &[1, 5, 6], &[2, 5, 6]])
    }

    fn bowtie() -> UniformClutter {
        clutter(5, 2, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4], &[3, 5], &[4, 5]])
    }

    #[test]
    fn figure1_c_is_chordal_both_ways() {
        let c = figure1_c();
        for mode in [ChordalMode::Deletion, ChordalMode::EmptySubclutter] {
            let w = chordality_search(&c, mode);
            let seq = w.witness().expect("chordal");
            assert!(verify_removal_sequence(seq).unwrap().result().is_empty());
        }
        assert_eq!(chordality_search(&c, ChordalMode::Deletion).witness().unwrap().steps.len(), 6);
    }

    #[test]
    fn figure1_d_is_refuted_at_step_zero() {
        let d = clutter(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 5], &[2, 4, 5], &[3, 4, 5]]);
        match chordality_search(&d, ChordalMode::Deletion) {
            SearchOutcome::Refuted { reason } => assert!(reason.contains("no simplicial maximal subcircuit")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bowtie_is_not_simplicial() {
        let k = UniformClutter::complete(5, 2).unwrap();
        assert!(subclutter_search(&k, &bowtie()).unwrap().is_refuted());
    }

    #[test]
    fn trivial_subclutter() {
        let c = figure1_c();
        let w = subclutter_search(&c, &c).unwrap();
        assert!(w.witness().unwrap().steps.is_empty());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let k = UniformClutter::complete(6, 2).unwrap();
        let empty = UniformClutter::empty(6, 2).unwrap();
        // a single expansion cannot finish 15 removals
        assert!(matches!(subclutter_search_with_budget(&k, &empty, 1).unwrap(), SearchOutcome::Unknown { .. }));
    }
}
