//! Free faces and searches over sequences of elementary collapses.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::face::{maximalize, Face};

pub const DEFAULT_COLLAPSE_BUDGET: usize = 1_000_000;

/// Nonempty faces properly contained in exactly one facet.
pub fn free_faces(d: &SimplicialComplex) -> Vec<Face> {
    let mut out = HashSet::new();
    for &tau in d.facets() {
        for sigma in tau.subsets() {
            if sigma.is_empty() || sigma == tau || out.contains(&sigma) {
                continue;
            }
            let owners = d.facets().iter().filter(|f| sigma.is_subset(**f)).count();
            if owners == 1 {
                out.insert(sigma);
            }
        }
    }
    let mut v: Vec<Face> = out.into_iter().collect();
    v.sort();
    v
}

/// Removal of every face between `free` and `facet`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseMove {
    pub free: Face,
    pub facet: Face,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapseOutcome {
    Found {
        moves: Vec<CollapseMove>,
        result: SimplicialComplex,
    },
    /// The whole reachable state space was explored.
    Impossible,
    /// Budget ran out first.
    Unknown {
        explored: usize,
    },
}

fn apply(d: &SimplicialComplex, m: CollapseMove) -> SimplicialComplex {
    let mut facets: Vec<Face> = d.facets().iter().copied().filter(|f| *f != m.facet).collect();
    if m.free.is_empty() {
        // a lone vertex collapses onto the empty complex
        return SimplicialComplex::from_facets_unchecked(d.n(), vec![Face::EMPTY]);
    }
    facets.extend(m.free.iter().map(|v| m.facet.without(v)));
    SimplicialComplex::from_facets_unchecked(d.n(), maximalize(facets))
}

/// Elementary collapses: a codimension-one free face with its facet. A single
/// vertex may additionally collapse along `∅`.
fn moves(d: &SimplicialComplex) -> Vec<CollapseMove> {
    if d.facets().len() == 1 && d.facets()[0].len() == 1 {
        return vec![CollapseMove { free: Face::EMPTY, facet: d.facets()[0] }];
    }
    let mut out = Vec::new();
    for &tau in d.facets() {
        if tau.len() < 2 {
            continue;
        }
        for v in tau.iter() {
            let sigma = tau.without(v);
            let owners = d.facets().iter().filter(|f| sigma.is_subset(**f)).count();
            if owners == 1 {
                out.push(CollapseMove { free: sigma, facet: tau });
            }
        }
    }
    // high-dimensional facets first: they are the ones a stop predicate usually targets
    out.sort_by(|a, b| b.facet.len().cmp(&a.facet.len()).then(a.facet.cmp(&b.facet)).then(a.free.cmp(&b.free)));
    out
}

/// Depth-first search for a collapse sequence ending in a complex accepted by
/// `stop`. Visited complexes are memoized; at most `budget` are expanded.
pub fn collapse_search<F>(d: &SimplicialComplex, stop: F, budget: usize) -> CollapseOutcome
where
    F: Fn(&SimplicialComplex) -> bool,
{
    let mut visited: HashSet<Vec<Face>> = HashSet::new();
    let mut path = Vec::new();
    let mut explored = 0usize;
    match dfs(d, &stop, budget, &mut visited, &mut path, &mut explored) {
        Some(Ok(result)) => CollapseOutcome::Found { moves: path, result },
        Some(Err(())) => CollapseOutcome::Unknown { explored },
        None => CollapseOutcome::Impossible,
    }
}

/// `Some(Ok)` found, `Some(Err)` budget exhausted, `None` exhausted subtree.
fn dfs<F>(
    d: &SimplicialComplex,
    stop: &F,
    budget: usize,
    visited: &mut HashSet<Vec<Face>>,
    path: &mut Vec<CollapseMove>,
    explored: &mut usize,
) -> Option<std::result::Result<SimplicialComplex, ()>>
where
    F: Fn(&SimplicialComplex) -> bool,
{
    if stop(d) {
        return Some(Ok(d.clone()));
    }
    if !visited.insert(d.facets().to_vec()) {
        return None;
    }
    if *explored >= budget {
        return Some(Err(()));
    }
    *explored += 1;
    for m in moves(d) {
        let next = apply(d, m);
        path.push(m);
        match dfs(&next, stop, budget, visited, path, explored) {
            None => {
                path.pop();
            }
            found => return found,
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| Face::of(f)).collect()).unwrap()
    }

    #[test]
    fn free_faces_examples() {
        assert_eq!(free_faces(&cx(2, &[&[1, 2]])), vec![Face::of(&[1]), Face::of(&[2])]);
        let s = free_faces(&cx(3, &[&[1, 2, 3]]));
        assert_eq!(s.len(), 6);
        let tri = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(free_faces(&tri).is_empty());
    }

    #[test]
    fn simplex_collapses_to_empty() {
        let s = cx(3, &[&[1, 2, 3]]);
        match collapse_search(&s, |c| c.is_empty_complex(), DEFAULT_COLLAPSE_BUDGET) {
            CollapseOutcome::Found { moves, result } => {
                assert!(result.is_empty_complex());
                let mut cur = s.clone();
                for m in moves {
                    cur = apply(&cur, m);
                }
                assert!(cur.is_empty_complex());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_cannot_collapse() {
        let tri = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(collapse_search(&tri, |c| c.dim() <= 0, 1000), CollapseOutcome::Impossible);
    }

    #[test]
    fn budget_is_reported() {
        let s = cx(4, &[&[1, 2, 3, 4]]);
        assert!(matches!(collapse_search(&s, |c| c.is_void(), 3), CollapseOutcome::Unknown { .. }));
    }
}
