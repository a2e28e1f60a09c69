//! Hochster-formula Betti numbers and everything read off a Betti table.
//!
//! `β_{i,W}(I_Δ) = dim H̃_{|W|-i-2}(Δ_W)`, computed from boundary matrices of
//! the induced subcomplexes of the Stanley-Reisner complex.

mod diagnostics;
mod quotients;
mod table;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Restricted;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{prime_factors, ChainComplex, FieldSpec};
use crate::ideal::SquarefreeMonomialIdeal;

pub use diagnostics::{resolution_diagnostics, Diagnostics};
pub use quotients::{colon_of_prefix, linear_quotients_search, linear_quotients_search_with_budget, verify_linear_quotients};
pub use table::{BettiDelta, BettiTable};

/// Default refusal threshold for full table sweeps.
pub const BETTI_GUARD: u32 = 16;

fn proper(i: &SquarefreeMonomialIdeal) -> Result<()> {
    if i.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// A single multigraded Betti number via Hochster's formula.
pub fn hochster_betti(ideal: &SquarefreeMonomialIdeal, i: usize, w: Face, field: FieldSpec) -> Result<u64> {
    proper(ideal)?;
    if field == FieldSpec::Integers {
        return Err(Error::FieldNotAllowed("z (Betti numbers need a field)"));
    }
    let q = w.len() as i64 - i as i64 - 2;
    if q < -1 {
        return Ok(0);
    }
    let view = Restricted { inner: ideal.complex_view(), w };
    Ok(ChainComplex::new(&view).homology_rank(q, field)? as u64)
}

/// Multidegrees that can carry a nonzero Betti number: unions of generators.
/// Any other `W` has a vertex in no generator inside `W`, making `Δ_W` a cone.
pub fn candidate_degrees(ideal: &SquarefreeMonomialIdeal) -> Vec<Face> {
    let support = ideal.support();
    support
        .subsets()
        .filter(|w| {
            let covered = ideal.generators().iter().filter(|g| g.is_subset(*w)).fold(Face::EMPTY, |a, g| a.union(*g));
            covered == *w && !w.is_empty()
        })
        .collect()
}

fn column(ideal: &SquarefreeMonomialIdeal, w: Face, field: FieldSpec) -> Result<Vec<(usize, u64)>> {
    let view = Restricted { inner: ideal.complex_view(), w };
    let mut chains = ChainComplex::new(&view);
    let dmin = ideal.min_degree().unwrap_or(0) as i64;
    let top = w.len() as i64 - 2;
    let mut out = Vec::new();
    for q in (dmin - 2).max(-1)..=top {
        let h = chains.homology_rank(q, field)?;
        if h > 0 {
            out.push(((top - q) as usize, h as u64));
        }
    }
    Ok(out)
}

pub fn betti_table(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with_guard(ideal, field, BETTI_GUARD)
}

/// Full multigraded table. Refuses `n > guard`.
pub fn betti_table_with_guard(ideal: &SquarefreeMonomialIdeal, field: FieldSpec, guard: u32) -> Result<BettiTable> {
    proper(ideal)?;
    if field == FieldSpec::Integers {
        return Err(Error::FieldNotAllowed("z (Betti numbers need a field)"));
    }
    if ideal.n() > guard {
        return Err(Error::TooLarge { what: "Betti table", n: ideal.n(), limit: guard });
    }
    let degrees = candidate_degrees(ideal);
    let columns: Vec<(Face, Vec<(usize, u64)>)> =
        degrees.par_iter().map(|&w| column(ideal, w, field).map(|c| (w, c))).collect::<Result<_>>()?;
    let mut table = BettiTable::new(ideal.n());
    for (w, col) in columns {
        for (i, c) in col {
            table.add(i, w, c);
        }
    }
    Ok(table)
}

/// All entries on the `d`-linear strand. Rejects non-equigenerated and zero ideals.
pub fn has_linear_resolution(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = ideal.equigenerated_degree().ok_or(Error::NotEquigenerated)?;
    Ok(betti_table(ideal, field)?.is_linear(d))
}

/// `min{t ≥ d : I_[t] has a t-linear resolution}`.
pub fn regularity_by_components(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<usize> {
    proper(ideal)?;
    let d = ideal.max_degree().ok_or(Error::ZeroIdeal)?;
    for t in d..=ideal.n() as usize {
        let (comp, _) = ideal.component(t)?;
        if betti_table(&comp, field)?.is_linear(t) {
            return Ok(t);
        }
    }
    Err(Error::Invalid("no component ideal has a linear resolution".into()))
}

/// Result of checking field independence via integral homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldCertificate {
    /// Every induced subcomplex has torsion-free integral homology.
    Certified,
    /// Primes dividing some torsion coefficient, with one witness `(W, dim)` each.
    Torsion { primes: Vec<u128>, witnesses: Vec<(Face, i64, Vec<u128>)> },
}

pub fn field_independence_certificate(ideal: &SquarefreeMonomialIdeal) -> Result<FieldCertificate> {
    proper(ideal)?;
    if ideal.n() > BETTI_GUARD {
        return Err(Error::TooLarge { what: "field certificate", n: ideal.n(), limit: BETTI_GUARD });
    }
    let degrees = candidate_degrees(ideal);
    let found: Vec<Vec<(Face, i64, Vec<u128>)>> = degrees
        .par_iter()
        .map(|&w| {
            let view = Restricted { inner: ideal.complex_view(), w };
            let mut chains = ChainComplex::new(&view);
            let mut out = Vec::new();
            for q in -1..=(w.len() as i64 - 2) {
                let h = chains.integral(q)?;
                if !h.torsion.is_empty() {
                    out.push((w, q, h.torsion));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let witnesses: Vec<(Face, i64, Vec<u128>)> = found.into_iter().flatten().collect();
    if witnesses.is_empty() {
        return Ok(FieldCertificate::Certified);
    }
    let primes: BTreeSet<u128> = witnesses.iter().flat_map(|(_, _, t)| t.iter().flat_map(|&x| prime_factors(x))).collect();
    Ok(FieldCertificate::Torsion { primes: primes.into_iter().collect(), witnesses })
}

/// Outcome of comparing `β(I + (x_F))` with `β(I)` beyond and at the bound `|W| = d + i + r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub d: usize,
    /// `reg(I : x_F)`.
    pub r: usize,
    /// Differences at `|W| > d + i + r`; must be empty.
    pub violations: Vec<(usize, Face, i64)>,
    /// Differences exactly at `|W| = d + i + r`.
    pub at_bound: Vec<(usize, Face, i64)>,
}

impl StabilityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn theorem1_stability_check(ideal: &SquarefreeMonomialIdeal, f: Face, field: FieldSpec) -> Result<StabilityReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = ideal.equigenerated_degree().ok_or(Error::NotEquigenerated)?;
    if f.len() != d {
        return Err(Error::Invalid(format!("F = {f} must have {d} vertices")));
    }
    if ideal.contains(f) {
        return Err(Error::AlreadyInIdeal(f));
    }
    let colon = ideal.colon(f);
    let r = if colon.is_zero() {
        return Err(Error::ZeroIdeal);
    } else {
        betti_table(&colon, field)?.reg().ok_or(Error::ZeroIdeal)?
    };
    let j = ideal.with_generator(f)?;
    let delta = betti_table(&j, field)?.delta_from(&betti_table(ideal, field)?);
    let mut violations = Vec::new();
    let mut at_bound = Vec::new();
    for (&(i, w), &v) in &delta.entries {
        let bound = d + i + r;
        if w.len() > bound {
            violations.push((i, w, v));
        } else if w.len() == bound {
            at_bound.push((i, w, v));
        }
    }
    Ok(StabilityReport { d, r, violations, at_bound })
}

/// `β_{i,W}` over each field, keyed by field; used for cross-field comparisons.
pub fn tables_over(ideal: &SquarefreeMonomialIdeal, fields: &[FieldSpec]) -> Result<BTreeMap<String, BettiTable>> {
    fields.iter().map(|f| Ok((f.to_string(), betti_table(ideal, *f)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: u32, gens: &[&[u32]]) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(n, gens.iter().map(|g| Face::of(g)).collect()).unwrap()
    }

    fn example1() -> SquarefreeMonomialIdeal {
        ideal(5, &[&[1, 4, 5], &[2, 3, 5]])
    }

    /// Taylor-complex count for two generators: β_0 = 2, β_{1,lcm} = 1.
    #[test]
    fn two_generator_ideals() {
        let i = ideal(4, &[&[1, 2, 4], &[1, 3, 4]]);
        assert_eq!(hochster_betti(&i, 1, Face::full(4), FieldSpec::Rationals).unwrap(), 1);
        let t = betti_table(&i, FieldSpec::Rationals).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.linear_strand(3), vec![2, 1]);
    }

    #[test]
    fn example1_values() {
        let i = example1();
        assert_eq!(hochster_betti(&i, 1, Face::full(5), FieldSpec::Rationals).unwrap(), 1);
        let t = betti_table(&i, FieldSpec::Rationals).unwrap();
        assert_eq!(t.reg(), Some(4));
        assert!(!has_linear_resolution(&i, FieldSpec::Rationals).unwrap());
        let j = i.with_generator(Face::of(&[3, 4, 5])).unwrap();
        assert!(has_linear_resolution(&j, FieldSpec::Rationals).unwrap());
        assert_eq!(regularity_by_components(&i, FieldSpec::Rationals).unwrap(), 4);
    }

    #[test]
    fn generators_reproduced_at_index_zero() {
        let i = ideal(6, &[&[1, 2], &[2, 3, 4], &[4, 5, 6], &[1, 6]]);
        let t = betti_table(&i, FieldSpec::Rationals).unwrap();
        let zero: Vec<Face> = t.entries().filter(|(k, _, _)| *k == 0).map(|(_, w, _)| w).collect();
        let mut gens = i.generators().to_vec();
        gens.sort();
        assert_eq!(zero, gens);
        assert!(t.entries().filter(|(k, _, _)| *k == 0).all(|(_, _, c)| c == 1));
    }

    #[test]
    fn veronese() {
        let i = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let t = betti_table(&i, FieldSpec::Rationals).unwrap();
        assert_eq!(t.graded_entry(0, 2), 3);
        assert_eq!(t.graded_entry(1, 3), 2);
        assert_eq!(t.reg(), Some(2));
    }

    #[test]
    fn zero_and_unit() {
        let z = SquarefreeMonomialIdeal::zero(4);
        let t = betti_table(&z, FieldSpec::Rationals).unwrap();
        assert!(t.is_empty() && t.reg().is_none());
        assert!(matches!(has_linear_resolution(&z, FieldSpec::Rationals), Err(Error::ZeroIdeal)));
        assert!(betti_table(&SquarefreeMonomialIdeal::unit(3), FieldSpec::Rationals).is_err());
        assert_eq!(field_independence_certificate(&z).unwrap(), FieldCertificate::Certified);
    }

    #[test]
    fn guard_refuses() {
        let big = ideal(17, &[&[1, 2]]);
        assert!(matches!(betti_table(&big, FieldSpec::Rationals), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn stability_on_example1() {
        let rep = theorem1_stability_check(&example1(), Face::of(&[3, 4, 5]), FieldSpec::Rationals).unwrap();
        assert_eq!(rep.r, 1);
        assert!(rep.holds());
        assert!(rep.at_bound.iter().any(|&(i, w, _)| i == 1 && w == Face::full(5)));
    }

    #[test]
    fn principal_is_linear() {
        let p = ideal(5, &[&[2, 3, 5]]);
        assert!(has_linear_resolution(&p, FieldSpec::PrimeField(2)).unwrap());
    }
}
