//! Square-free monomial ideals, identified with their minimal generating faces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clutter::{check_ground, check_in_range};
use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{minimalize, Face};

/// Guard for enumerating Stanley-Reisner facets.
pub const STANLEY_REISNER_GUARD: u32 = 24;

/// Minimal generators form a lexicographically sorted antichain.
/// No generators is the zero ideal; the single generator `∅` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct SquarefreeMonomialIdeal {
    n: u32,
    generators: Vec<Face>,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: u32,
    generators: Vec<Face>,
}

impl TryFrom<IdealRepr> for SquarefreeMonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        SquarefreeMonomialIdeal::new(r.n, r.generators)
    }
}

impl From<SquarefreeMonomialIdeal> for IdealRepr {
    fn from(i: SquarefreeMonomialIdeal) -> Self {
        IdealRepr { n: i.n, generators: i.generators }
    }
}

impl fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(n={}, {:?})", self.n, self.generators)
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| if g.is_empty() { "1".to_string() } else { g.iter().map(|v| format!("x{v}")).collect::<String>() })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl SquarefreeMonomialIdeal {
    /// Any generating set; non-minimal generators are dropped.
    pub fn new(n: u32, generators: Vec<Face>) -> Result<Self> {
        check_ground(n)?;
        for &g in &generators {
            check_in_range(g, n)?;
        }
        Ok(Self::from_minimal_unchecked(n, generators))
    }

    pub(crate) fn from_minimal_unchecked(n: u32, generators: Vec<Face>) -> Self {
        SquarefreeMonomialIdeal { n, generators: minimalize(generators) }
    }

    pub fn zero(n: u32) -> Self {
        SquarefreeMonomialIdeal { n, generators: Vec::new() }
    }

    pub fn unit(n: u32) -> Self {
        SquarefreeMonomialIdeal { n, generators: vec![Face::EMPTY] }
    }

    pub fn principal(n: u32, f: Face) -> Result<Self> {
        Self::new(n, vec![f])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&Face::EMPTY)
    }

    /// `x_f ∈ I`.
    pub fn contains(&self, f: Face) -> bool {
        self.generators.iter().any(|g| g.is_subset(f))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.generators.iter().map(|g| g.len()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.generators.iter().map(|g| g.len()).max()
    }

    /// The common generator degree, if any. `None` for the zero ideal.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        (self.max_degree() == Some(d)).then_some(d)
    }

    /// The ground set vertices occurring in some generator.
    pub fn support(&self) -> Face {
        self.generators.iter().fold(Face::EMPTY, |a, g| a.union(*g))
    }

    pub fn sum(&self, other: &SquarefreeMonomialIdeal) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Mismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ok(Self::from_minimal_unchecked(self.n, gens))
    }

    /// `I + (x_f)`.
    pub fn with_generator(&self, f: Face) -> Result<Self> {
        check_in_range(f, self.n)?;
        let mut gens = self.generators.clone();
        gens.push(f);
        Ok(Self::from_minimal_unchecked(self.n, gens))
    }

    /// Generated by the pairwise lcms, i.e. unions.
    pub fn intersection(&self, other: &SquarefreeMonomialIdeal) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Mismatch);
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for &a in &self.generators {
            for &b in &other.generators {
                gens.push(a.union(b));
            }
        }
        Ok(Self::from_minimal_unchecked(self.n, gens))
    }

    /// `I : x_f`, generated by `G ∖ f`.
    pub fn colon(&self, f: Face) -> SquarefreeMonomialIdeal {
        let gens = self.generators.iter().map(|g| g.difference(f)).collect();
        Self::from_minimal_unchecked(self.n, gens)
    }

    /// True iff every generator is a single variable (or the ideal is zero).
    pub fn is_variable_generated(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }

    /// `I_[t]` and the complex `Δ_t` whose Stanley-Reisner ideal it is.
    pub fn component(&self, t: usize) -> Result<(SquarefreeMonomialIdeal, SimplicialComplex)> {
        let d = self.max_degree().unwrap_or(0);
        if t < d {
            return Err(Error::ComponentDegree { t, d });
        }
        let ground = Face::full(self.n);
        let mut gens = Vec::new();
        for &g in &self.generators {
            let free = ground.difference(g);
            if t - g.len() <= free.len() {
                for extra in free.subsets_of_size(t - g.len()) {
                    gens.push(g.union(extra));
                }
            }
        }
        let comp = Self::from_minimal_unchecked(self.n, gens);
        let delta_t = if self.is_unit() && t == 0 {
            SimplicialComplex::void(self.n)?
        } else {
            let mut faces = self.stanley_reisner_complex()?.facets().to_vec();
            if t >= 1 && t - 1 <= self.n as usize {
                faces.extend(ground.subsets_of_size(t - 1));
            }
            SimplicialComplex::new(self.n, faces)?
        };
        Ok((comp, delta_t))
    }

    /// The complex of non-members. Refuses the unit ideal.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if self.n > STANLEY_REISNER_GUARD {
            return Err(Error::TooLarge { what: "Stanley-Reisner complex", n: self.n, limit: STANLEY_REISNER_GUARD });
        }
        let mut facets = Vec::new();
        let mut by_vertex: Vec<Vec<Face>> = vec![Vec::new(); self.n as usize + 1];
        for &g in &self.generators {
            if let Some(m) = g.max_vertex() {
                by_vertex[m as usize].push(g);
            }
        }
        self.sr_rec(1, Face::EMPTY, &by_vertex, &mut facets);
        Ok(SimplicialComplex::from_facets_unchecked(self.n, facets))
    }

    /// Include-or-skip over vertices in increasing order; generators are checked
    /// at their largest vertex so each partial set stays a face.
    fn sr_rec(&self, v: u32, current: Face, by_vertex: &[Vec<Face>], out: &mut Vec<Face>) {
        if v > self.n {
            let maximal = Face::full(self.n).difference(current).iter().all(|u| self.contains(current.with(u)));
            if maximal {
                out.push(current);
            }
            return;
        }
        let with = current.with(v);
        let addable = !by_vertex[v as usize].iter().any(|g| g.is_subset(with));
        if addable {
            self.sr_rec(v + 1, with, by_vertex, out);
        }
        // skipping v is useful only if some generator through v can still block it
        let below = Face::full(v - 1);
        let blockable = self.generators.iter().any(|g| g.contains(v) && g.without(v).intersection(below).is_subset(current));
        if !addable || blockable {
            self.sr_rec(v + 1, current, by_vertex, out);
        }
    }

    /// Membership view of the Stanley-Reisner complex.
    pub fn complex_view(&self) -> StanleyReisnerView<'_> {
        StanleyReisnerView { ideal: self }
    }
}

/// Faces are the subsets of `[n]` outside the ideal.
#[derive(Clone, Copy)]
pub struct StanleyReisnerView<'a> {
    ideal: &'a SquarefreeMonomialIdeal,
}

impl FaceSet for StanleyReisnerView<'_> {
    fn ground(&self) -> Face {
        Face::full(self.ideal.n)
    }

    fn contains_face(&self, f: Face) -> bool {
        !self.ideal.contains(f)
    }
}
