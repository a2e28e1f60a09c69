//! Square-free stable ideals and the simplicial clutters they come from.

use std::collections::BTreeSet;

use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::face::{binomial, Face};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::reduction::{RemovalSequence, RemovalStep};

fn degree(ideal: &SquarefreeMonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    ideal.equigenerated_degree().ok_or(Error::NotEquigenerated)
}

/// Exchange test on generators: `(u ∖ m(u)) ∪ {j} ∈ I` for `j < m(u)`, `j ∉ u`.
pub fn is_squarefree_stable(ideal: &SquarefreeMonomialIdeal) -> Result<bool> {
    degree(ideal)?;
    Ok(ideal.generators().iter().all(|&u| {
        let m = u.max_vertex().expect("positive degree");
        let rest = u.without(m);
        (1..m).filter(|j| !u.contains(*j)).all(|j| ideal.contains(rest.with(j)))
    }))
}

/// Smallest square-free stable set of `d`-faces containing `seeds`.
pub fn stable_closure(n: u32, seeds: &[Face]) -> Result<SquarefreeMonomialIdeal> {
    let mut all: BTreeSet<u64> = seeds.iter().map(|f| f.bits()).collect();
    let mut work: Vec<Face> = seeds.to_vec();
    while let Some(u) = work.pop() {
        let Some(m) = u.max_vertex() else { continue };
        let rest = u.without(m);
        for j in (1..m).filter(|j| !u.contains(*j)) {
            let g = rest.with(j);
            if all.insert(g.bits()) {
                work.push(g);
            }
        }
    }
    SquarefreeMonomialIdeal::new(n, all.into_iter().map(Face::from_bits).collect())
}

/// Steps `(F_k ∖ m(F_k), {F_k})` from `C_{n,d}`, with generators in increasing
/// monomial order for `x_1 < ⋯ < x_n` (equivalently, increasing bitmask).
pub fn stable_to_sequence(ideal: &SquarefreeMonomialIdeal) -> Result<RemovalSequence> {
    let d = degree(ideal)?;
    if !is_squarefree_stable(ideal)? {
        return Err(Error::NotStable);
    }
    let mut gens = ideal.generators().to_vec();
    gens.sort_by_key(|f| f.bits());
    let steps =
        gens.into_iter().map(|f| RemovalStep::new(f.without(f.max_vertex().expect("positive degree")), vec![f])).collect();
    Ok(RemovalSequence::new(UniformClutter::complete(ideal.n(), d)?, steps))
}

/// `β_{i,i+d}(I) = Σ_u C(m(u) - d, i)`.
pub fn ek_betti(ideal: &SquarefreeMonomialIdeal) -> Result<Vec<u64>> {
    let d = degree(ideal)?;
    if !is_squarefree_stable(ideal)? {
        return Err(Error::NotStable);
    }
    let top = ideal.generators().iter().map(|u| u.max_vertex().unwrap_or(0) as usize - d).max().unwrap_or(0);
    Ok((0..=top)
        .map(|i| ideal.generators().iter().map(|u| binomial((u.max_vertex().unwrap_or(0) as usize - d) as u64, i as u64)).sum())
        .collect())
}
