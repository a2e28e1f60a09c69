//! Facet-presented simplicial complexes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clutter::{check_ground, check_in_range};
use crate::error::{Error, Result};
use crate::face::{maximalize, Face};
use crate::ideal::SquarefreeMonomialIdeal;

/// Anything with a downward-closed membership test on subsets of `ground()`.
pub trait FaceSet {
    fn ground(&self) -> Face;

    /// Must be downward closed.
    fn contains_face(&self, f: Face) -> bool;

    /// Faces of size `k`, in increasing bitmask order.
    fn faces_of_size(&self, k: usize) -> Vec<Face> {
        self.ground().subsets_of_size(k).filter(|f| self.contains_face(*f)).collect()
    }
}

impl<T: FaceSet + ?Sized> FaceSet for &T {
    fn ground(&self) -> Face {
        (**self).ground()
    }

    fn contains_face(&self, f: Face) -> bool {
        (**self).contains_face(f)
    }

    fn faces_of_size(&self, k: usize) -> Vec<Face> {
        (**self).faces_of_size(k)
    }
}

/// `inner` restricted to subsets of `w`.
#[derive(Clone, Copy)]
pub struct Restricted<S> {
    pub inner: S,
    pub w: Face,
}

impl<S: FaceSet> FaceSet for Restricted<S> {
    fn ground(&self) -> Face {
        self.inner.ground().intersection(self.w)
    }

    fn contains_face(&self, f: Face) -> bool {
        f.is_subset(self.w) && self.inner.contains_face(f)
    }
}

/// `inner` minus every face containing one of `forbidden`.
#[derive(Clone)]
pub struct Avoiding<S> {
    pub inner: S,
    pub forbidden: Vec<Face>,
}

impl<S: FaceSet> FaceSet for Avoiding<S> {
    fn ground(&self) -> Face {
        self.inner.ground()
    }

    fn contains_face(&self, f: Face) -> bool {
        self.inner.contains_face(f) && !self.forbidden.iter().any(|g| g.is_subset(f))
    }
}

/// A complex given by its facets. `facets == []` is the void complex,
/// `facets == [∅]` the empty complex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    n: u32,
    facets: Vec<Face>,
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
    type Error = Error;

    fn try_from(r: ComplexRepr) -> Result<Self> {
        SimplicialComplex::new(r.n, r.facets)
    }
}

impl From<SimplicialComplex> for ComplexRepr {
    fn from(c: SimplicialComplex) -> Self {
        ComplexRepr { n: c.n, facets: c.facets }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, {:?})", self.n, self.facets)
    }
}

impl SimplicialComplex {
    /// Non-maximal generating faces are discarded.
    pub fn new(n: u32, faces: Vec<Face>) -> Result<Self> {
        check_ground(n)?;
        for &f in &faces {
            check_in_range(f, n)?;
        }
        Ok(SimplicialComplex { n, facets: maximalize(faces) })
    }

    pub(crate) fn from_facets_unchecked(n: u32, facets: Vec<Face>) -> Self {
        SimplicialComplex { n, facets: maximalize(facets) }
    }

    pub fn void(n: u32) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn empty(n: u32) -> Result<Self> {
        Self::new(n, vec![Face::EMPTY])
    }

    pub fn simplex(n: u32, f: Face) -> Result<Self> {
        Self::new(n, vec![f])
    }

    /// The boundary of the simplex on `f`: all proper subsets.
    pub fn simplex_boundary(n: u32, f: Face) -> Result<Self> {
        if f.is_empty() {
            return Self::void(n);
        }
        Self::new(n, f.subsets_of_size(f.len() - 1).collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    /// `max |F| - 1`; the void complex reports `-2`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-2)
    }

    pub fn vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |a, f| a.union(*f))
    }

    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(*f))
    }

    /// Number of faces of each size `0..=dim+1`.
    pub fn f_vector(&self) -> Vec<u64> {
        let top = (self.dim() + 1).max(-1);
        (0..=top).map(|k| self.faces_of_size(k as usize).len() as u64).collect()
    }

    pub fn all_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for k in 0..=(self.dim() + 1).max(-1) {
            out.extend(self.faces_of_size(k as usize));
        }
        out
    }

    /// `Δ_W`: the faces of `self` inside `w`.
    pub fn induced(&self, w: Face) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        let facets = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_facets_unchecked(self.n, facets)
    }

    /// Faces of dimension `<= i`, or with `pure` the faces of dimension exactly `i`.
    pub fn skeleton(&self, i: i64, pure: bool) -> Result<SimplicialComplex> {
        let dim = self.dim();
        if i < -1 || i > dim {
            return Err(Error::SkeletonDimension { requested: i, dim });
        }
        let k = (i + 1) as usize;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.len() >= k {
                faces.extend(f.subsets_of_size(k));
            } else if !pure {
                faces.push(f);
            }
        }
        Ok(Self::from_facets_unchecked(self.n, faces))
    }

    /// Faces `F ∪ G`. Vertex sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.n != other.n {
            return Err(Error::Mismatch);
        }
        let shared = self.vertices().intersection(other.vertices());
        if !shared.is_empty() {
            return Err(Error::OverlappingJoin(shared));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                facets.push(f.union(g));
            }
        }
        Ok(Self::from_facets_unchecked(self.n, facets))
    }

    /// Removes every face containing one of `faces`.
    pub fn without_faces_containing(&self, faces: &[Face]) -> SimplicialComplex {
        let mut out = Vec::new();
        for &f in &self.facets {
            let mut pieces = vec![f];
            for &g in faces {
                let mut next = Vec::new();
                for p in pieces {
                    if g.is_subset(p) {
                        next.extend(g.iter().map(|v| p.without(v)));
                    } else {
                        next.push(p);
                    }
                }
                pieces = next;
            }
            out.extend(pieces);
        }
        Self::from_facets_unchecked(self.n, out)
    }

    /// Minimal non-faces inside `[n]`.
    pub fn stanley_reisner_ideal(&self) -> SquarefreeMonomialIdeal {
        if self.is_void() {
            return SquarefreeMonomialIdeal::unit(self.n);
        }
        let ground = Face::full(self.n);
        let mut gens: Vec<Face> = ground.difference(self.vertices()).iter().map(Face::singleton).collect();
        let verts = self.vertices();
        let top = (self.dim() + 2) as usize;
        for k in 2..=top.min(verts.len()) {
            for f in verts.subsets_of_size(k) {
                if !self.contains(f) && f.iter().all(|v| self.contains(f.without(v))) {
                    gens.push(f);
                }
            }
        }
        SquarefreeMonomialIdeal::from_minimal_unchecked(self.n, gens)
    }
}

impl FaceSet for SimplicialComplex {
    fn ground(&self) -> Face {
        self.vertices()
    }

    fn contains_face(&self, f: Face) -> bool {
        self.contains(f)
    }

    fn faces_of_size(&self, k: usize) -> Vec<Face> {
        let mut out: Vec<Face> = Vec::new();
        for &f in &self.facets {
            if f.len() >= k {
                out.extend(f.subsets_of_size(k));
            }
        }
        out.sort_unstable_by_key(|f| f.bits());
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| Face::of(f)).collect()).unwrap()
    }

    #[test]
    fn void_and_empty_differ() {
        let v = SimplicialComplex::void(3).unwrap();
        let e = SimplicialComplex::empty(3).unwrap();
        assert_ne!(v, e);
        assert!(v.is_void() && !e.is_void());
        assert!(e.contains(Face::EMPTY) && !v.contains(Face::EMPTY));
        assert_eq!(e.dim(), -1);
    }

    #[test]
    fn induced_examples() {
        let pent = cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert_eq!(pent.induced(Face::of(&[1, 2, 3])), cx(5, &[&[1, 2], &[2, 3]]));
        assert_eq!(pent.induced(Face::full(5)), pent);
        let s = SimplicialComplex::simplex(5, Face::full(5)).unwrap();
        assert_eq!(s.induced(Face::of(&[2, 4])).facets(), &[Face::of(&[2, 4])]);
        assert!(pent.induced(Face::EMPTY).is_empty_complex());
    }

    #[test]
    fn skeleton_examples() {
        let s = SimplicialComplex::simplex(4, Face::full(4)).unwrap();
        let k4 = s.skeleton(1, false).unwrap();
        assert_eq!(k4.facets().len(), 6);
        let mixed = cx(4, &[&[1, 2, 3], &[3, 4]]);
        assert_eq!(mixed.skeleton(0, true).unwrap().facets().len(), 4);
        assert_eq!(mixed.skeleton(mixed.dim(), false).unwrap(), mixed);
        assert_eq!(mixed.skeleton(2, true).unwrap(), cx(4, &[&[1, 2, 3]]));
        assert!(matches!(mixed.skeleton(3, false), Err(Error::SkeletonDimension { .. })));
        assert!(mixed.skeleton(-1, false).unwrap().is_empty_complex());
    }

    #[test]
    fn join_examples() {
        let two = cx(5, &[&[1], &[2]]);
        let three = cx(5, &[&[3]]);
        assert_eq!(two.join(&three).unwrap(), cx(5, &[&[1, 3], &[2, 3]]));
        let other = cx(5, &[&[3], &[4]]);
        let square = two.join(&other).unwrap();
        assert_eq!(square.facets().len(), 4);
        assert_eq!(square.dim(), 1);
        assert!(matches!(two.join(&cx(5, &[&[2, 5]])), Err(Error::OverlappingJoin(_))));
        let e = SimplicialComplex::empty(5).unwrap();
        assert_eq!(two.join(&e).unwrap(), two);
    }

    #[test]
    fn stanley_reisner_round_trip() {
        let pent = cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let i = pent.stanley_reisner_ideal();
        assert_eq!(i.generators().len(), 5);
        assert_eq!(i.stanley_reisner_complex().unwrap(), pent);
        let isolated = cx(6, &[&[1, 2]]);
        let gens = isolated.stanley_reisner_ideal();
        assert!(gens.generators().contains(&Face::of(&[3])));
        assert_eq!(gens.stanley_reisner_complex().unwrap(), isolated);
    }

    #[test]
    fn removing_faces() {
        let s = SimplicialComplex::simplex(3, Face::full(3)).unwrap();
        let r = s.without_faces_containing(&[Face::of(&[1, 2])]);
        assert_eq!(r, cx(3, &[&[1, 3], &[2, 3]]));
        let f = s.f_vector();
        assert_eq!(f, vec![1, 3, 3, 1]);
    }
}
