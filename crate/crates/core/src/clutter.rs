//! Uniform clutters and the set-theoretic operations on them.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{maximalize, Face, MAX_VERTICES};
use crate::ideal::SquarefreeMonomialIdeal;

/// Default refusal threshold for materializing clique complexes.
pub const CLIQUE_COMPLEX_GUARD: u32 = 20;

/// A `d`-uniform clutter on `[n]`. Circuits are kept sorted lexicographically.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "ClutterRepr", into = "ClutterRepr")]
pub struct UniformClutter {
    n: u32,
    d: usize,
    circuits: Vec<Face>,
    index: HashSet<Face>,
}

#[derive(Serialize, Deserialize)]
struct ClutterRepr {
    n: u32,
    d: usize,
    circuits: Vec<Face>,
}

impl TryFrom<ClutterRepr> for UniformClutter {
    type Error = Error;

    fn try_from(r: ClutterRepr) -> Result<Self> {
        UniformClutter::new(r.n, r.d, r.circuits)
    }
}

impl From<UniformClutter> for ClutterRepr {
    fn from(c: UniformClutter) -> Self {
        ClutterRepr { n: c.n, d: c.d, circuits: c.circuits }
    }
}

impl PartialEq for UniformClutter {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.circuits == other.circuits
    }
}

impl Eq for UniformClutter {}

impl fmt::Debug for UniformClutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformClutter(n={}, d={}, {:?})", self.n, self.d, self.circuits)
    }
}

pub(crate) fn check_ground(n: u32) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::GroundSetSize(n));
    }
    Ok(())
}

pub(crate) fn check_in_range(f: Face, n: u32) -> Result<()> {
    if let Some(m) = f.max_vertex() {
        if m > n {
            return Err(Error::VertexOutOfRange { vertex: m, n });
        }
    }
    Ok(())
}

impl UniformClutter {
    /// Validates and canonicalizes. Duplicate circuits are an error.
    pub fn new(n: u32, d: usize, circuits: Vec<Face>) -> Result<Self> {
        check_ground(n)?;
        if d == 0 {
            return Err(Error::Invalid("circuit size d must be positive".into()));
        }
        let mut index = HashSet::with_capacity(circuits.len());
        for &c in &circuits {
            check_in_range(c, n)?;
            if c.len() != d {
                return Err(Error::NotUniform { circuit: c, found: c.len(), expected: d });
            }
            if !index.insert(c) {
                return Err(Error::DuplicateCircuit(c));
            }
        }
        let mut circuits = circuits;
        circuits.sort();
        Ok(UniformClutter { n, d, circuits, index })
    }

    fn from_trusted(n: u32, d: usize, mut circuits: Vec<Face>) -> Self {
        circuits.sort();
        let index = circuits.iter().copied().collect();
        UniformClutter { n, d, circuits, index }
    }

    pub fn empty(n: u32, d: usize) -> Result<Self> {
        Self::new(n, d, Vec::new())
    }

    /// All `d`-subsets of `[n]`; empty when `n < d`.
    pub fn complete(n: u32, d: usize) -> Result<Self> {
        check_ground(n)?;
        if d == 0 {
            return Err(Error::Invalid("circuit size d must be positive".into()));
        }
        let circuits = Face::full(n).subsets_of_size(d).collect();
        Ok(Self::from_trusted(n, d, circuits))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn circuits(&self) -> &[Face] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.index.contains(&f)
    }

    pub fn is_complete(&self) -> bool {
        self.complement().is_empty()
    }

    pub fn is_subclutter_of(&self, other: &UniformClutter) -> bool {
        self.n == other.n && self.d == other.d && self.circuits.iter().all(|c| other.contains(*c))
    }

    /// `C_{n,d}` minus the circuits of `self`.
    pub fn complement(&self) -> UniformClutter {
        let circuits = Face::full(self.n).subsets_of_size(self.d).filter(|f| !self.contains(*f)).collect();
        Self::from_trusted(self.n, self.d, circuits)
    }

    /// Removes exactly the circuits containing `e`.
    pub fn deletion(&self, e: Face) -> UniformClutter {
        let circuits = self.circuits.iter().copied().filter(|c| !e.is_subset(*c)).collect();
        Self::from_trusted(self.n, self.d, circuits)
    }

    /// Removes the listed circuits; circuits not present are ignored.
    pub fn without_circuits(&self, removed: &[Face]) -> UniformClutter {
        let circuits = self.circuits.iter().copied().filter(|c| !removed.contains(c)).collect();
        Self::from_trusted(self.n, self.d, circuits)
    }

    /// Adds circuits, which must have size `d`.
    pub fn with_circuits(&self, added: &[Face]) -> Result<UniformClutter> {
        let mut circuits = self.circuits.clone();
        for &f in added {
            if !self.contains(f) {
                circuits.push(f);
            }
        }
        Self::new(self.n, self.d, circuits)
    }

    pub fn circuits_containing(&self, e: Face) -> Vec<Face> {
        self.circuits.iter().copied().filter(|c| e.is_subset(*c)).collect()
    }

    fn check_subcircuit(&self, e: Face) -> Result<()> {
        check_in_range(e, self.n)?;
        if e.len() + 1 != self.d {
            return Err(Error::SubcircuitSize(e, self.d - 1));
        }
        Ok(())
    }

    /// `N[e] = e ∪ {c : e ∪ {c} is a circuit}` for a `(d-1)`-set `e`.
    pub fn closed_neighborhood(&self, e: Face) -> Result<Face> {
        self.check_subcircuit(e)?;
        Ok(self.neighborhood_unchecked(e))
    }

    pub(crate) fn neighborhood_unchecked(&self, e: Face) -> Face {
        let mut nb = e;
        for v in Face::full(self.n).difference(e).iter() {
            if self.contains(e.with(v)) {
                nb = nb.with(v);
            }
        }
        nb
    }

    /// True iff `|f| < d` or every `d`-subset of `f` is a circuit.
    pub fn is_clique(&self, f: Face) -> bool {
        f.len() < self.d || f.subsets_of_size(self.d).all(|s| self.contains(s))
    }

    /// `e` is simplicial when its closed neighbourhood is a clique.
    pub fn is_simplicial(&self, e: Face) -> Result<bool> {
        let nb = self.closed_neighborhood(e)?;
        Ok(self.is_clique(nb))
    }

    /// The `(d-1)`-sets lying in at least one circuit.
    pub fn maximal_subcircuits(&self) -> Vec<Face> {
        let mut out: Vec<Face> =
            Face::full(self.n).subsets_of_size(self.d - 1).filter(|e| self.neighborhood_unchecked(*e) != *e).collect();
        out.sort();
        out
    }

    /// All simplicial `(d-1)`-subsets of `[n]`, trivial ones included.
    pub fn simplicial_elements(&self) -> Vec<Face> {
        let mut out: Vec<Face> =
            Face::full(self.n).subsets_of_size(self.d - 1).filter(|e| self.is_clique(self.neighborhood_unchecked(*e))).collect();
        out.sort();
        out
    }

    /// Simplicial elements that are also maximal subcircuits.
    pub fn simplicial_maximal_subcircuits(&self) -> Vec<Face> {
        let mut out: Vec<Face> = Face::full(self.n)
            .subsets_of_size(self.d - 1)
            .filter(|e| {
                let nb = self.neighborhood_unchecked(*e);
                nb != *e && self.is_clique(nb)
            })
            .collect();
        out.sort();
        out
    }

    /// Generators are the circuits of the complement; the zero ideal for `C_{n,d}`.
    pub fn circuit_ideal_of_complement(&self) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::from_minimal_unchecked(self.n, self.complement().circuits)
    }

    /// The circuit ideal of `self` itself.
    pub fn circuit_ideal(&self) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::from_minimal_unchecked(self.n, self.circuits.clone())
    }

    /// Membership view of the clique complex, without enumerating facets.
    pub fn clique_view(&self) -> CliqueView<'_> {
        CliqueView { clutter: self }
    }

    pub fn clique_complex(&self) -> Result<SimplicialComplex> {
        self.clique_complex_with_guard(CLIQUE_COMPLEX_GUARD)
    }

    /// Facets are the inclusion-maximal cliques. Refuses `n > guard`.
    pub fn clique_complex_with_guard(&self, guard: u32) -> Result<SimplicialComplex> {
        if self.n > guard {
            return Err(Error::TooLarge { what: "clique complex", n: self.n, limit: guard });
        }
        let ground = Face::full(self.n);
        if (self.n as usize) < self.d {
            return SimplicialComplex::new(self.n, vec![ground]);
        }
        let mut candidates: Vec<Face> =
            Face::full(self.n).subsets_of_size(self.d - 1).filter(|e| self.neighborhood_unchecked(*e) == *e).collect();
        let mut level: Vec<Face> = self.circuits.clone();
        while !level.is_empty() {
            let mut next: HashSet<Face> = HashSet::new();
            for &f in &level {
                let top = f.max_vertex().unwrap_or(0);
                let mut grew = false;
                for v in ground.difference(f).iter() {
                    let g = f.with(v);
                    let ok = g.subsets_of_size(self.d).filter(|s| s.contains(v)).all(|s| self.contains(s));
                    if ok {
                        grew = true;
                        if v > top {
                            next.insert(g);
                        }
                    }
                }
                if !grew {
                    candidates.push(f);
                }
            }
            level = next.into_iter().collect();
        }
        SimplicialComplex::new(self.n, maximalize(candidates))
    }
}

/// The clique complex as a membership predicate.
#[derive(Clone, Copy)]
pub struct CliqueView<'a> {
    clutter: &'a UniformClutter,
}

impl FaceSet for CliqueView<'_> {
    fn ground(&self) -> Face {
        Face::full(self.clutter.n)
    }

    fn contains_face(&self, f: Face) -> bool {
        f.is_subset(Face::full(self.clutter.n)) && self.clutter.is_clique(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure1_c() -> UniformClutter {
        let c = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 2, 6], [1, 5, 6], [2, 5, 6]];
        UniformClutter::new(6, 3, c.iter().map(|v| Face::of(v)).collect()).unwrap()
    }

    fn figure1_d() -> UniformClutter {
        let c = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 5]];
        UniformClutter::new(5, 3, c.iter().map(|v| Face::of(v)).collect()).unwrap()
    }

    fn faces(list: &[&[u32]]) -> Vec<Face> {
        let mut v: Vec<Face> = list.iter().map(|f| Face::of(f)).collect();
        v.sort();
        v
    }

    #[test]
    fn complete_clutters() {
        assert_eq!(UniformClutter::complete(3, 2).unwrap().circuits(), faces(&[&[1, 2], &[1, 3], &[2, 3]]).as_slice());
        assert_eq!(
            UniformClutter::complete(4, 3).unwrap().circuits(),
            faces(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]).as_slice()
        );
        let small = UniformClutter::complete(2, 3).unwrap();
        assert!(small.is_empty());
        assert_eq!(small.n(), 2);
        assert!(small.complement().is_empty());
    }

    #[test]
    fn complement_examples() {
        let d = figure1_d();
        assert_eq!(d.complement().circuits(), faces(&[&[1, 2, 5], &[1, 3, 5], &[1, 4, 5], &[2, 3, 4]]).as_slice());
        assert!(UniformClutter::complete(5, 3).unwrap().complement().is_empty());
        assert_eq!(UniformClutter::empty(4, 2).unwrap().complement().len(), 6);
        assert_eq!(d.complement().complement(), d);
    }

    #[test]
    fn deletion_examples() {
        let c = figure1_c();
        let del = c.deletion(Face::of(&[1, 3]));
        assert_eq!(del.len(), 6);
        assert!(!del.contains(Face::of(&[1, 2, 3])) && !del.contains(Face::of(&[1, 3, 4])));
        assert_eq!(c.deletion(Face::of(&[3, 6])), c);
        assert_eq!(
            UniformClutter::complete(4, 3).unwrap().deletion(Face::of(&[1, 2])).circuits(),
            faces(&[&[1, 3, 4], &[2, 3, 4]]).as_slice()
        );
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(figure1_d().closed_neighborhood(Face::of(&[3, 4])).unwrap(), Face::of(&[1, 3, 4, 5]));
        assert_eq!(figure1_c().closed_neighborhood(Face::of(&[1, 3])).unwrap(), Face::of(&[1, 2, 3, 4]));
        assert_eq!(figure1_c().closed_neighborhood(Face::of(&[3, 6])).unwrap(), Face::of(&[3, 6]));
        assert!(matches!(figure1_c().closed_neighborhood(Face::of(&[1])), Err(Error::SubcircuitSize(..))));
    }

    #[test]
    fn cliques() {
        let d = figure1_d();
        assert!(!d.is_clique(Face::of(&[1, 3, 4, 5])));
        assert!(d.is_clique(Face::of(&[1, 5])));
        let k = UniformClutter::complete(6, 3).unwrap();
        assert!(k.is_clique(Face::full(6)));
    }

    #[test]
    fn maximal_subcircuits_of_d() {
        let sc = figure1_d().maximal_subcircuits();
        let expected: Vec<Face> = Face::full(5).subsets_of_size(2).filter(|e| *e != Face::of(&[1, 5])).collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(sc, expected);
        assert!(UniformClutter::empty(5, 3).unwrap().maximal_subcircuits().is_empty());
        assert_eq!(UniformClutter::complete(4, 3).unwrap().maximal_subcircuits().len(), 6);
    }

    #[test]
    fn simplicial_elements_examples() {
        let d = figure1_d();
        assert!(d.simplicial_maximal_subcircuits().is_empty());
        assert!(figure1_c().simplicial_elements().contains(&Face::of(&[1, 3])));
        let k = UniformClutter::complete(5, 3).unwrap();
        assert_eq!(k.simplicial_elements().len(), 10);
    }

    #[test]
    fn clique_complex_examples() {
        let full = UniformClutter::complete(5, 3).unwrap().clique_complex().unwrap();
        assert_eq!(full.facets(), &[Face::full(5)]);
        let empty = UniformClutter::empty(5, 3).unwrap().clique_complex().unwrap();
        assert_eq!(empty.facets().len(), 10);
        assert!(empty.facets().iter().all(|f| f.len() == 2));
        let c = figure1_c().clique_complex().unwrap();
        assert!(c.facets().contains(&Face::of(&[1, 2, 3, 4])));
        assert!(c.facets().contains(&Face::of(&[1, 2, 5, 6])));
    }

    #[test]
    fn clique_complex_guard() {
        let big = UniformClutter::empty(21, 2).unwrap();
        assert!(matches!(big.clique_complex(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn validation() {
        assert!(matches!(UniformClutter::new(4, 2, vec![Face::of(&[1, 2]), Face::of(&[1, 2])]), Err(Error::DuplicateCircuit(_))));
        assert!(matches!(UniformClutter::new(4, 2, vec![Face::of(&[1, 2, 3])]), Err(Error::NotUniform { .. })));
        assert!(matches!(UniformClutter::new(3, 2, vec![Face::of(&[1, 4])]), Err(Error::VertexOutOfRange { .. })));
    }
}
