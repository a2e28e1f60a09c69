//! Reduced simplicial homology of the augmented chain complex.
//!
//! Chains in dimension `i` are spanned by faces with `i + 1` vertices, so
//! dimension `-1` is spanned by `∅` whenever the complex is not void.

mod collapse;
pub mod matrix;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::face::Face;

pub use collapse::{collapse_search, free_faces, CollapseMove, CollapseOutcome, DEFAULT_COLLAPSE_BUDGET};
pub use matrix::{is_prime, rank_mod_p, rank_rational, smith_invariants, IntMatrix};

/// Coefficients for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    Integers,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Every field variant used by the "over all implemented fields" checks.
    pub fn standard_fields() -> [FieldSpec; 3] {
        [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)]
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
            FieldSpec::Integers => write!(f, "z"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `gf:p` and `z`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(FieldSpec::Rationals),
            "z" => Ok(FieldSpec::Integers),
            other => {
                let p = other
                    .strip_prefix("gf:")
                    .and_then(|x| x.parse::<u64>().ok())
                    .ok_or_else(|| Error::Invalid(format!("unknown field '{s}' (use q, gf:p or z)")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

/// Faces of dimension `i`, sorted by bitmask.
pub fn chain_basis<S: FaceSet + ?Sized>(s: &S, i: i64) -> Vec<Face> {
    if i < -1 || i + 1 > s.ground().len() as i64 {
        return Vec::new();
    }
    s.faces_of_size((i + 1) as usize)
}

/// Alternating-sign boundary of a face into its facets-by-one-vertex.
fn boundary_between(rows: &[Face], cols: &[Face]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    if rows.is_empty() || cols.is_empty() {
        return m;
    }
    let index: std::collections::HashMap<Face, usize> = rows.iter().enumerate().map(|(k, f)| (*f, k)).collect();
    for (j, tau) in cols.iter().enumerate() {
        for (k, v) in tau.iter().enumerate() {
            if let Some(&r) = index.get(&tau.without(v)) {
                m.set(r, j, if k % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

/// `∂_i : C_i → C_{i-1}`. Rows are `(i-1)`-faces, columns `i`-faces.
pub fn boundary_matrix<S: FaceSet + ?Sized>(s: &S, i: i64) -> IntMatrix {
    boundary_between(&chain_basis(s, i - 1), &chain_basis(s, i))
}

fn rank_over(m: &IntMatrix, field: FieldSpec) -> Result<usize> {
    match field {
        FieldSpec::Rationals => Ok(rank_rational(m)),
        FieldSpec::PrimeField(p) => rank_mod_p(m, p),
        FieldSpec::Integers => Err(Error::FieldNotAllowed("z (use integral homology)")),
    }
}

/// `dim H̃_i(Δ; k)`.
pub fn reduced_homology_rank<S: FaceSet + ?Sized>(s: &S, i: i64, field: FieldSpec) -> Result<usize> {
    let mut chains = ChainComplex::new(s);
    chains.homology_rank(i, field)
}

/// Free rank and torsion coefficients of `H̃_i(Δ; ℤ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralHomology {
    pub rank: usize,
    pub torsion: Vec<u128>,
}

pub fn integral_homology<S: FaceSet + ?Sized>(s: &S, i: i64) -> Result<IntegralHomology> {
    ChainComplex::new(s).integral(i)
}

/// Chain groups and ranks of boundary maps, computed lazily and cached.
pub struct ChainComplex<'a, S: FaceSet + ?Sized> {
    s: &'a S,
    bases: Vec<Option<Vec<Face>>>,
    ranks: std::collections::HashMap<(i64, FieldSpec), usize>,
}

impl<'a, S: FaceSet + ?Sized> ChainComplex<'a, S> {
    pub fn new(s: &'a S) -> Self {
        let slots = s.ground().len() + 2;
        ChainComplex { s, bases: vec![None; slots + 1], ranks: Default::default() }
    }

    pub fn basis(&mut self, i: i64) -> &[Face] {
        if i < -1 || (i + 1) as usize >= self.bases.len() {
            return &[];
        }
        let slot = (i + 1) as usize;
        if self.bases[slot].is_none() {
            self.bases[slot] = Some(chain_basis(self.s, i));
        }
        self.bases[slot].as_deref().unwrap_or(&[])
    }

    pub fn dim_chains(&mut self, i: i64) -> usize {
        self.basis(i).len()
    }

    pub fn boundary(&mut self, i: i64) -> IntMatrix {
        let rows = self.basis(i - 1).to_vec();
        let cols = self.basis(i).to_vec();
        boundary_between(&rows, &cols)
    }

    fn boundary_rank(&mut self, i: i64, field: FieldSpec) -> Result<usize> {
        if let Some(&r) = self.ranks.get(&(i, field)) {
            return Ok(r);
        }
        let r = if self.dim_chains(i) == 0 || self.dim_chains(i - 1) == 0 {
            0
        } else {
            let key = match field {
                FieldSpec::Integers => FieldSpec::Rationals,
                f => f,
            };
            rank_over(&self.boundary(i), key)?
        };
        self.ranks.insert((i, field), r);
        Ok(r)
    }

    pub fn homology_rank(&mut self, i: i64, field: FieldSpec) -> Result<usize> {
        if field == FieldSpec::Integers {
            return Err(Error::FieldNotAllowed("z (use integral homology)"));
        }
        let c = self.dim_chains(i);
        if c == 0 {
            return Ok(0);
        }
        Ok(c - self.boundary_rank(i, field)? - self.boundary_rank(i + 1, field)?)
    }

    pub fn integral(&mut self, i: i64) -> Result<IntegralHomology> {
        let c = self.dim_chains(i);
        if c == 0 {
            return Ok(IntegralHomology::default());
        }
        let down = self.boundary_rank(i, FieldSpec::Rationals)?;
        let up_matrix = self.boundary(i + 1);
        let invariants = smith_invariants(&up_matrix)?;
        let torsion: Vec<u128> = invariants.iter().copied().filter(|&x| x > 1).collect();
        Ok(IntegralHomology { rank: c - down - invariants.len(), torsion })
    }
}

/// Reduced homology in every dimension from `-1` to the top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    /// `ranks[k]` is the rank in dimension `k - 1`.
    pub ranks: Vec<usize>,
    /// Only filled for `FieldSpec::Integers`, aligned with `ranks`.
    pub torsion: Vec<Vec<u128>>,
}

impl HomologyProfile {
    pub fn rank(&self, dim: i64) -> usize {
        if dim < -1 {
            return 0;
        }
        self.ranks.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    /// True when every rank is zero and there is no torsion.
    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0) && self.torsion.iter().all(|t| t.is_empty())
    }

    /// Primes dividing some torsion coefficient.
    pub fn torsion_primes(&self) -> BTreeSet<u128> {
        let mut out = BTreeSet::new();
        for &t in self.torsion.iter().flatten() {
            out.extend(prime_factors(t));
        }
        out
    }
}

pub(crate) fn prime_factors(mut x: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut k = 2u128;
    while k * k <= x {
        if x.is_multiple_of(k) {
            out.push(k);
            while x.is_multiple_of(k) {
                x /= k;
            }
        }
        k += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

pub fn homology_profile<S: FaceSet + ?Sized>(s: &S, field: FieldSpec) -> Result<HomologyProfile> {
    let mut chains = ChainComplex::new(s);
    let mut top = -1i64;
    while chains.dim_chains(top + 1) > 0 {
        top += 1;
    }
    let mut ranks = Vec::new();
    let mut torsion = Vec::new();
    for i in -1..=top {
        if field == FieldSpec::Integers {
            let h = chains.integral(i)?;
            ranks.push(h.rank);
            torsion.push(h.torsion);
        } else {
            ranks.push(chains.homology_rank(i, field)?);
        }
    }
    Ok(HomologyProfile { field, ranks, torsion })
}
