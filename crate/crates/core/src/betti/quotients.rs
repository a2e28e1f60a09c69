//! Linear quotients: orderings `u_1, ..., u_m` of the minimal generators with
//! every `(u_1, ..., u_{k-1}) : u_k` generated by variables.

use std::collections::HashSet;

use crate::face::{minimalize, Face};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::{SearchOutcome, DEFAULT_SEARCH_BUDGET};

/// Minimal generators of `(prefix) : u`.
pub fn colon_of_prefix(prefix: &[Face], u: Face) -> Vec<Face> {
    minimalize(prefix.iter().map(|g| g.difference(u)).collect())
}

fn admissible(prefix: &[Face], u: Face) -> bool {
    colon_of_prefix(prefix, u).iter().all(|g| g.len() == 1)
}

/// True iff `order` is a permutation of the generators with linear quotients.
pub fn verify_linear_quotients(ideal: &SquarefreeMonomialIdeal, order: &[Face]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort();
    let mut gens = ideal.generators().to_vec();
    gens.sort();
    sorted == gens && (0..order.len()).all(|k| admissible(&order[..k], order[k]))
}

/// Depth-first search over admissible next generators, lexicographically
/// smallest first. Failed chosen-sets are memoized (the colon depends only on
/// the set already placed, not on its order).
pub fn linear_quotients_search(ideal: &SquarefreeMonomialIdeal) -> SearchOutcome<Vec<Face>> {
    linear_quotients_search_with_budget(ideal, DEFAULT_SEARCH_BUDGET)
}

pub fn linear_quotients_search_with_budget(ideal: &SquarefreeMonomialIdeal, budget: usize) -> SearchOutcome<Vec<Face>> {
    let gens = ideal.generators().to_vec();
    let mut search = Search { gens: &gens, failed: HashSet::new(), budget, explored: 0 };
    let mut order = Vec::with_capacity(gens.len());
    let mut chosen = vec![0u64; gens.len().div_ceil(64).max(1)];
    match search.dfs(&mut order, &mut chosen) {
        Step::Found => SearchOutcome::Found(order),
        Step::Dead => SearchOutcome::Refuted { reason: "no generator ordering has linear quotients".into() },
        Step::Budget => SearchOutcome::Unknown { explored: search.explored },
    }
}

enum Step {
    Found,
    Dead,
    Budget,
}

struct Search<'a> {
    gens: &'a [Face],
    failed: HashSet<Vec<u64>>,
    budget: usize,
    explored: usize,
}

impl Search<'_> {
    fn dfs(&mut self, order: &mut Vec<Face>, chosen: &mut [u64]) -> Step {
        if order.len() == self.gens.len() {
            return Step::Found;
        }
        if self.failed.contains(chosen) {
            return Step::Dead;
        }
        if self.explored >= self.budget {
            return Step::Budget;
        }
        self.explored += 1;
        for k in 0..self.gens.len() {
            if chosen[k / 64] >> (k % 64) & 1 == 1 || !admissible(order, self.gens[k]) {
                continue;
            }
            chosen[k / 64] |= 1 << (k % 64);
            order.push(self.gens[k]);
            match self.dfs(order, chosen) {
                Step::Dead => {}
                other => return other,
            }
            order.pop();
            chosen[k / 64] &= !(1 << (k % 64));
        }
        self.failed.insert(chosen.to_vec());
        Step::Dead
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: u32, gens: &[&[u32]]) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(n, gens.iter().map(|g| Face::of(g)).collect()).unwrap()
    }

    #[test]
    fn example1_has_no_linear_quotients() {
        let i = ideal(5, &[&[1, 4, 5], &[2, 3, 5]]);
        assert!(linear_quotients_search(&i).is_refuted());
    }

    #[test]
    fn principal_and_zero() {
        assert!(linear_quotients_search(&ideal(4, &[&[1, 3]])).is_found());
        let z = SquarefreeMonomialIdeal::zero(3);
        assert_eq!(linear_quotients_search(&z), SearchOutcome::Found(vec![]));
    }

    #[test]
    fn complement_of_bowtie_has_linear_quotients() {
        let i = ideal(5, &[&[1, 4], &[1, 5], &[2, 4], &[2, 5]]);
        let w = linear_quotients_search(&i);
        let order = w.witness().unwrap();
        assert!(verify_linear_quotients(&i, order));
    }

    #[test]
    fn five_cycle_has_none() {
        let i = ideal(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert!(linear_quotients_search(&i).is_refuted());
    }

    #[test]
    fn squarefree_veronese() {
        let gens: Vec<Face> = Face::full(6).subsets_of_size(3).collect();
        let i = SquarefreeMonomialIdeal::new(6, gens).unwrap();
        let w = linear_quotients_search(&i);
        assert!(verify_linear_quotients(&i, w.witness().unwrap()));
    }
}
