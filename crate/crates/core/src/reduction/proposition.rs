//! Homological identities around a simplicial element, and the hypotheses and
//! conclusions for contractible complexes without free faces.

use serde::{Deserialize, Serialize};

use crate::betti::{field_independence_certificate, has_linear_resolution, FieldCertificate};
use crate::clutter::UniformClutter;
use crate::complex::{Avoiding, FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{free_faces, homology_profile, ChainComplex, FieldSpec};
use crate::reduction::{chordality_search, ChordalMode};
use crate::SearchOutcome;

/// Faces `f ⊆ N` with `e ⊄ f`: the join of `∂e` with the simplex on `N ∖ e`.
struct BoundaryJoin {
    e: Face,
    nb: Face,
}

impl FaceSet for BoundaryJoin {
    fn ground(&self) -> Face {
        self.nb
    }

    fn contains_face(&self, f: Face) -> bool {
        f.is_subset(self.nb) && !self.e.is_subset(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop24Report {
    pub d: usize,
    /// Dimensions `i > d-2` where `H̃_i(Δ) ≠ H̃_i(Δ*)`.
    pub part_a_failures: Vec<i64>,
    /// Dimensions `i ≠ d-2` where `H̃_i(Δ) ≠ H̃_i(Δ')`.
    pub part_b_failures: Vec<i64>,
    /// `h_{d-2}(Δ*) - h_{d-2}(Δ) + h_{d-3}(∂e * ⟨N ∖ e⟩) - h_{d-3}(Δ*)`.
    pub part_c_alternating_sum: i64,
    /// `h_{d-2}(Δ*) ≤ h_{d-2}(Δ)` and `h_{d-3}(Δ*) ≤ h_{d-3}(join)`.
    pub part_c_ends_ok: bool,
}

impl Prop24Report {
    pub fn holds(&self) -> bool {
        self.part_a_failures.is_empty()
            && self.part_b_failures.is_empty()
            && self.part_c_alternating_sum == 0
            && self.part_c_ends_ok
    }
}

pub fn proposition24_check(c: &UniformClutter, e: Face, f: Face, field: FieldSpec) -> Result<Prop24Report> {
    let d = c.d();
    if d < 2 {
        return Err(Error::Invalid("the identities need d ≥ 2".into()));
    }
    let nb = c.closed_neighborhood(e)?;
    if !c.is_clique(nb) {
        return Err(Error::NotSimplicial { e });
    }
    if !(e.is_proper_subset(f) && f.len() == d && f.is_subset(nb)) {
        return Err(Error::BadExtension { e, f });
    }
    let delta = c.clique_view();
    let star = Avoiding { inner: delta, forbidden: vec![e] };
    let prime = Avoiding { inner: delta, forbidden: vec![f] };
    let join = BoundaryJoin { e, nb };

    let mut cd = ChainComplex::new(&delta);
    let mut cs = ChainComplex::new(&star);
    let mut cp = ChainComplex::new(&prime);
    let mut cj = ChainComplex::new(&join);
    let top = c.n() as i64;
    let dd = d as i64;
    let mut part_a_failures = Vec::new();
    let mut part_b_failures = Vec::new();
    for i in -1..=top {
        let hd = cd.homology_rank(i, field)?;
        if i > dd - 2 && hd != cs.homology_rank(i, field)? {
            part_a_failures.push(i);
        }
        if i != dd - 2 && hd != cp.homology_rank(i, field)? {
            part_b_failures.push(i);
        }
    }
    let hs2 = cs.homology_rank(dd - 2, field)? as i64;
    let hd2 = cd.homology_rank(dd - 2, field)? as i64;
    let hj3 = cj.homology_rank(dd - 3, field)? as i64;
    let hs3 = cs.homology_rank(dd - 3, field)? as i64;
    Ok(Prop24Report {
        d,
        part_a_failures,
        part_b_failures,
        part_c_alternating_sum: hs2 - hd2 + hj3 - hs3,
        part_c_ends_ok: hs2 <= hd2 && hs3 <= hj3,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop44Report {
    pub d: usize,
    pub pure: bool,
    /// Integral reduced homology vanishes in every dimension.
    pub homologically_trivial: bool,
    pub free_faces: Vec<Face>,
    /// `(d+1)`-sets all of whose `d`-subsets are facets.
    pub big_cliques: Vec<Face>,
    pub chordal_deletion: SearchOutcome<usize>,
    pub chordal_empty_subclutter: SearchOutcome<usize>,
    /// `d`-linear resolution of `I(C̄_Δ)` over ℚ, GF(2), GF(3).
    pub linear_over: Vec<(FieldSpec, bool)>,
    pub certificate: FieldCertificate,
}

impl Prop44Report {
    pub fn hypotheses_met(&self) -> bool {
        self.pure && self.homologically_trivial && self.free_faces.is_empty() && self.big_cliques.is_empty()
    }

    pub fn conclusions_hold(&self) -> bool {
        self.chordal_deletion.is_refuted()
            && self.linear_over.iter().all(|(_, ok)| *ok)
            && self.certificate == FieldCertificate::Certified
    }
}

/// Runs every hypothesis and conclusion check on a pure complex `Δ`, using the
/// clutter `C_Δ` of its facets.
pub fn proposition44_check(complex: &SimplicialComplex) -> Result<Prop44Report> {
    let facets = complex.facets();
    let d = facets.first().map(|f| f.len()).ok_or_else(|| Error::Invalid("void complex".into()))?;
    if d == 0 {
        return Err(Error::Invalid("the empty complex has no facets of positive size".into()));
    }
    let pure = complex.is_pure();
    let homologically_trivial = homology_profile(complex, FieldSpec::Integers)?.is_acyclic();
    let free = free_faces(complex);
    let clutter = UniformClutter::new(complex.n(), d, facets.iter().copied().filter(|f| f.len() == d).collect())?;
    let mut big_cliques = Vec::new();
    for &f in clutter.circuits() {
        for v in Face::full(complex.n()).difference(f).iter() {
            let g = f.with(v);
            if clutter.is_clique(g) {
                big_cliques.push(g);
            }
        }
    }
    big_cliques.sort();
    big_cliques.dedup();
    let chordal_deletion = chordality_search(&clutter, ChordalMode::Deletion).map(|s| s.steps.len());
    let chordal_empty_subclutter = chordality_search(&clutter, ChordalMode::EmptySubclutter).map(|s| s.steps.len());
    let ideal = clutter.circuit_ideal_of_complement();
    let mut linear_over = Vec::new();
    for field in FieldSpec::standard_fields() {
        let ok = !ideal.is_zero() && ideal.equigenerated_degree() == Some(d) && has_linear_resolution(&ideal, field)?;
        linear_over.push((field, ok));
    }
    let certificate = field_independence_certificate(&ideal)?;
    Ok(Prop44Report {
        d,
        pure,
        homologically_trivial,
        free_faces: free,
        big_cliques,
        chordal_deletion,
        chordal_empty_subclutter,
        linear_over,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clutter(n: u32, d: usize, c: &[&[u32]]) -> UniformClutter {
        UniformClutter::new(n, d, c.iter().map(|f| Face::of(f)).collect()).unwrap()
    }

    #[test]
    fn complete_clutter_identities() {
        let k = UniformClutter::complete(4, 3).unwrap();
        let r = proposition24_check(&k, Face::of(&[1, 2]), Face::of(&[1, 2, 3]), FieldSpec::Rationals).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn figure1_c_identities() {
        let c = clutter(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 5], &[1, 2, 6], &[1, 5, 6], &[2, 5, 6]]);
        let r = proposition24_check(&c, Face::of(&[1, 3]), Face::of(&[1, 2, 3]), FieldSpec::Rationals).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn rejects_bad_extension() {
        let k = UniformClutter::complete(4, 3).unwrap();
        assert!(matches!(
            proposition24_check(&k, Face::of(&[1, 2]), Face::of(&[1, 3, 4]), FieldSpec::Rationals),
            Err(Error::BadExtension { .. })
        ));
    }

    #[test]
    fn full_triangle_fails_hypotheses() {
        let s = SimplicialComplex::simplex(3, Face::full(3)).unwrap();
        let r = proposition44_check(&s).unwrap();
        assert!(!r.free_faces.is_empty());
        assert!(!r.hypotheses_met());
    }
}
