mod common;

use clutterbetti::betti::{betti_table, hochster_betti};
use clutterbetti::homology::{homology_profile, reduced_homology_rank};
use clutterbetti::reduction::predicted_delta;
use clutterbetti::sampling::{self, random_ideal};
use clutterbetti::{Face, FieldSpec, SimplicialComplex, SquarefreeMonomialIdeal, UniformClutter};
use common::{koszul_betti, reduced_betti, table_map, Field};

const FIELDS: [(FieldSpec, Field); 3] =
    [(FieldSpec::Rationals, None), (FieldSpec::PrimeField(2), Some(2)), (FieldSpec::PrimeField(3), Some(3))];

#[test]
fn hochster_tables_match_upper_koszul_oracle() {
    let mut rng = sampling::rng(101);
    for k in 0..120 {
        let n = 3 + (k % 5) as u32;
        let ideal = random_ideal(&mut rng, n, 4, 1 + k % 6);
        for (field, oracle_field) in FIELDS {
            let ours = table_map(&betti_table(&ideal, field).unwrap());
            assert_eq!(ours, koszul_betti(&ideal, oracle_field), "{ideal} over {field}");
        }
    }
}

#[test]
fn torsion_ideal_differs_between_characteristics() {
    // Stanley–Reisner ideal of the 6-vertex projective plane.
    let rp2 = clutterbetti::fixtures::complex("rp2-test").unwrap();
    let ideal = rp2.stanley_reisner_ideal();
    let q = table_map(&betti_table(&ideal, FieldSpec::Rationals).unwrap());
    let f2 = table_map(&betti_table(&ideal, FieldSpec::PrimeField(2)).unwrap());
    assert_eq!(q, koszul_betti(&ideal, None));
    assert_eq!(f2, koszul_betti(&ideal, Some(2)));
    assert_ne!(q, f2);
}

#[test]
fn single_entries_agree_with_oracle() {
    let ideal = SquarefreeMonomialIdeal::new(5, vec![Face::of(&[1, 4, 5]), Face::of(&[2, 3, 5])]).unwrap();
    let oracle = koszul_betti(&ideal, None);
    for w in Face::full(5).subsets() {
        for i in 0..4 {
            let ours = hochster_betti(&ideal, i, w, FieldSpec::Rationals).unwrap();
            assert_eq!(ours, oracle.get(&(i, w.bits())).copied().unwrap_or(0), "i={i} W={w}");
        }
    }
}

fn all_faces(c: &SimplicialComplex) -> Vec<u64> {
    c.all_faces().iter().map(|f| f.bits()).collect()
}

#[test]
fn homology_ranks_match_oracle_on_random_complexes() {
    let mut rng = sampling::rng(7);
    for k in 0..150 {
        let n = 3 + (k % 6) as u32;
        let facets = random_ideal(&mut rng, n, 4, 1 + k % 7).generators().to_vec();
        let c = SimplicialComplex::new(n, facets).unwrap();
        for (field, oracle_field) in FIELDS {
            let ours = homology_profile(&c, field).unwrap();
            let theirs = reduced_betti(&all_faces(&c), oracle_field);
            for (idx, &b) in theirs.iter().enumerate() {
                assert_eq!(ours.rank(idx as i64 - 1), b, "{c:?} dim {} over {field}", idx as i64 - 1);
            }
            for dim in theirs.len() as i64..n as i64 {
                assert_eq!(reduced_homology_rank(&c, dim, field).unwrap(), 0);
            }
        }
    }
}

/// Every graph on at most six vertices, every simplicial `e` and every edge through it.
#[test]
fn delta_formula_exhaustive_for_small_graphs() {
    let mut checked = 0;
    for n in 2..=6u32 {
        let edges: Vec<Face> = Face::full(n).subsets_of_size(2).collect();
        for mask in 0u32..(1 << edges.len()) {
            let circuits: Vec<Face> = (0..edges.len()).filter(|b| mask >> b & 1 == 1).map(|b| edges[b]).collect();
            let c = UniformClutter::new(n, 2, circuits).unwrap();
            let ideal = c.circuit_ideal_of_complement();
            for e in c.simplicial_maximal_subcircuits() {
                for f in c.circuits_containing(e) {
                    let j = ideal.with_generator(f).unwrap();
                    let delta = predicted_delta(&ideal, e, f).unwrap();
                    for (field, oracle_field) in &FIELDS[..2] {
                        let base = betti_table(&ideal, *field).unwrap();
                        let predicted = table_map(&base.apply_delta(&delta).expect("nonnegative"));
                        assert_eq!(predicted, koszul_betti(&j, *oracle_field), "C={c:?} e={e} F={f}");
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "only {checked} instances");
}

#[test]
fn delta_formula_random_uniform_three() {
    let mut rng = sampling::rng(2024);
    for _ in 0..60 {
        let (c, e, f) = sampling::random_single_removal(&mut rng, 6, 3);
        let ideal = c.circuit_ideal_of_complement();
        let j = ideal.with_generator(f).unwrap();
        let delta = predicted_delta(&ideal, e, f).unwrap();
        for (field, oracle_field) in FIELDS {
            let base = betti_table(&ideal, field).unwrap();
            assert_eq!(table_map(&base.apply_delta(&delta).unwrap()), koszul_betti(&j, oracle_field));
        }
    }
}
