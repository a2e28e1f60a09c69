//! Seeded random instances for sweeps and property checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::clutter::UniformClutter;
use crate::face::Face;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::reduction::{stable_closure, RemovalSequence, RemovalStep};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Keeps each `d`-subset of `[n]` with probability `density`.
pub fn random_clutter(rng: &mut Rng64, n: u32, d: usize, density: f64) -> UniformClutter {
    let circuits = Face::full(n).subsets_of_size(d).filter(|_| rng.gen_bool(density)).collect();
    UniformClutter::new(n, d, circuits).expect("subsets of [n] are valid circuits")
}

/// A valid single removal `(C, e, F)`: `e` simplicial over `C`, `F ∈ C`, `e ⊂ F`.
pub fn random_single_removal(rng: &mut Rng64, n: u32, d: usize) -> (UniformClutter, Face, Face) {
    loop {
        let density = rng.gen_range(0.35..1.0);
        let c = random_clutter(rng, n, d, density);
        let simp = c.simplicial_maximal_subcircuits();
        if let Some(&e) = simp.choose(rng) {
            let through = c.circuits_containing(e);
            let f = *through.choose(rng).expect("maximal subcircuit lies in a circuit");
            return (c, e, f);
        }
    }
}

/// Up to `max_steps` random steps from `base`, each removing a random nonempty
/// subset of the circuits through a random simplicial maximal subcircuit.
pub fn random_removal_sequence(rng: &mut Rng64, base: &UniformClutter, max_steps: usize) -> RemovalSequence {
    let mut cur = base.clone();
    let mut steps = Vec::new();
    let target = rng.gen_range(1..=max_steps.max(1));
    while steps.len() < target {
        let simp = cur.simplicial_maximal_subcircuits();
        let Some(&e) = simp.choose(rng) else { break };
        let mut through = cur.circuits_containing(e);
        through.shuffle(rng);
        let k = rng.gen_range(1..=through.len());
        through.truncate(k);
        through.sort();
        cur = cur.without_circuits(&through);
        steps.push(RemovalStep::new(e, through));
    }
    RemovalSequence::new(base.clone(), steps)
}

/// A square-free stable ideal generated in degree `d`.
pub fn random_stable_ideal(rng: &mut Rng64, n: u32, d: usize) -> SquarefreeMonomialIdeal {
    let all: Vec<Face> = Face::full(n).subsets_of_size(d).collect();
    let k = rng.gen_range(1..=3.min(all.len()));
    let seeds: Vec<Face> = all.choose_multiple(rng, k).copied().collect();
    stable_closure(n, &seeds).expect("subsets of [n]")
}

/// Generators of mixed degrees in `1..=max_degree` (nonzero, proper).
pub fn random_ideal(rng: &mut Rng64, n: u32, max_degree: usize, gens: usize) -> SquarefreeMonomialIdeal {
    let ground: Vec<u32> = (1..=n).collect();
    let picks = (0..gens.max(1))
        .map(|_| {
            let k = rng.gen_range(1..=max_degree.min(n as usize));
            ground.choose_multiple(rng, k).copied().collect::<Face>()
        })
        .collect();
    SquarefreeMonomialIdeal::new(n, picks).expect("vertices in [n]")
}

/// A random ideal whose generators do not all share one degree.
pub fn random_nonequigenerated_ideal(rng: &mut Rng64, n: u32) -> SquarefreeMonomialIdeal {
    loop {
        let gens = rng.gen_range(2..=5);
        let i = random_ideal(rng, n, 4.min(n as usize), gens);
        if i.equigenerated_degree().is_none() && i.min_degree() >= Some(2) {
            return i;
        }
    }
}

/// An ideal equigenerated in degree `d` together with a `d`-set outside it.
pub fn random_equigenerated_with_extra(rng: &mut Rng64, n: u32, d: usize) -> (SquarefreeMonomialIdeal, Face) {
    let all: Vec<Face> = Face::full(n).subsets_of_size(d).collect();
    loop {
        let k = rng.gen_range(1..all.len());
        let mut pick: Vec<Face> = all.choose_multiple(rng, k).copied().collect();
        let f = pick.pop().expect("k ≥ 1");
        if pick.is_empty() {
            continue;
        }
        return (SquarefreeMonomialIdeal::new(n, pick).expect("vertices in [n]"), f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{is_squarefree_stable, verify_removal_sequence};

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = random_clutter(&mut rng(7), 6, 3, 0.5);
        let b = random_clutter(&mut rng(7), 6, 3, 0.5);
        assert_eq!(a, b);
    }

    #[test]
    fn samples_are_valid() {
        let mut r = rng(11);
        for _ in 0..20 {
            let (c, e, f) = random_single_removal(&mut r, 6, 3);
            assert!(c.is_simplicial(e).unwrap() && c.contains(f) && e.is_subset(f));
            let base = UniformClutter::complete(6, 2).unwrap();
            verify_removal_sequence(&random_removal_sequence(&mut r, &base, 6)).unwrap();
            assert!(is_squarefree_stable(&random_stable_ideal(&mut r, 6, 3)).unwrap());
            assert!(random_nonequigenerated_ideal(&mut r, 6).equigenerated_degree().is_none());
        }
    }
}
