//! Closed-form predictions for a simplicial removal, checked against the oracle.

use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, BettiDelta, BettiTable};
use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::face::{binomial, Face};
use crate::homology::FieldSpec;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::reduction::{verify_removal_sequence, RemovalSequence};

/// The clutter `C` with `I = I(C̄)`, after checking the single-removal hypotheses.
fn validated_clutter(ideal: &SquarefreeMonomialIdeal, e: Face, f: Face) -> Result<UniformClutter> {
    let d = f.len();
    if d == 0 {
        return Err(Error::Invalid("F must be nonempty".into()));
    }
    if !ideal.is_zero() && ideal.equigenerated_degree() != Some(d) {
        return Err(Error::NotEquigenerated);
    }
    if e.len() + 1 != d || !e.is_subset(f) {
        return Err(Error::BadExtension { e, f });
    }
    if ideal.contains(f) {
        return Err(Error::AlreadyInIdeal(f));
    }
    let c = UniformClutter::new(ideal.n(), d, ideal.generators().to_vec())?.complement();
    if !c.is_simplicial(e)? {
        return Err(Error::NotSimplicial { e });
    }
    Ok(c)
}

/// `V = {i : x_i ∈ I : x_F}`.
fn colon_variables(ideal: &SquarefreeMonomialIdeal, f: Face) -> Face {
    ideal.colon(f).generators().iter().filter(|g| g.len() == 1).fold(Face::EMPTY, |a, g| a.union(*g))
}

/// `β(I + (x_F)) - β(I)`: `+1` at `(|S|, F ∪ S)` for each `S ⊆ V`.
pub fn predicted_delta(ideal: &SquarefreeMonomialIdeal, e: Face, f: Face) -> Result<BettiDelta> {
    validated_clutter(ideal, e, f)?;
    let v = colon_variables(ideal, f);
    let mut delta = BettiDelta::default();
    for s in v.subsets() {
        delta.add(s.len(), f.union(s), 1);
    }
    Ok(delta)
}

/// Which of the three splitting identities hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub colon: SquarefreeMonomialIdeal,
    pub expected_colon: SquarefreeMonomialIdeal,
    pub intersection: SquarefreeMonomialIdeal,
    pub expected_intersection: SquarefreeMonomialIdeal,
    /// `(i, W, β(J), β(I) + β(x_F) + β_{i-1}(I ∩ (x_F)))` wherever they differ.
    pub splitting_failures: Vec<(usize, Face, u64, u64)>,
}

impl SplittingReport {
    pub fn colon_ok(&self) -> bool {
        self.colon == self.expected_colon
    }

    pub fn intersection_ok(&self) -> bool {
        self.intersection == self.expected_intersection
    }

    pub fn splitting_ok(&self) -> bool {
        self.splitting_failures.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.colon_ok() && self.intersection_ok() && self.splitting_ok()
    }
}

/// `J = I + (x_F)` splits as `I` plus `(x_F)`, with `I ∩ (x_F) = x_F · (x_i : x_i x_e ∈ I)`.
pub fn splitting_check(ideal: &SquarefreeMonomialIdeal, e: Face, f: Face, field: FieldSpec) -> Result<SplittingReport> {
    validated_clutter(ideal, e, f)?;
    let n = ideal.n();
    let colon = ideal.colon(f);
    let vars: Vec<Face> =
        Face::full(n).difference(e).iter().filter(|&i| ideal.contains(e.with(i))).map(Face::singleton).collect();
    let expected_colon = SquarefreeMonomialIdeal::new(n, vars.clone())?;
    let principal = SquarefreeMonomialIdeal::principal(n, f)?;
    let intersection = ideal.intersection(&principal)?;
    let expected_intersection = SquarefreeMonomialIdeal::new(n, vars.iter().map(|v| v.union(f)).collect())?;

    let j = ideal.with_generator(f)?;
    let tj = betti_table(&j, field)?;
    let ti = betti_table(ideal, field)?;
    let tk = betti_table(&principal, field)?;
    let tl = betti_table(&intersection, field)?;
    let mut keys: Vec<(usize, Face)> = tj.entries().map(|(i, w, _)| (i, w)).collect();
    keys.extend(ti.entries().map(|(i, w, _)| (i, w)));
    keys.extend(tk.entries().map(|(i, w, _)| (i, w)));
    keys.extend(tl.entries().map(|(i, w, _)| (i + 1, w)));
    keys.sort();
    keys.dedup();
    let mut splitting_failures = Vec::new();
    for (i, w) in keys {
        let lhs = tj.get(i, w);
        let rhs = ti.get(i, w) + tk.get(i, w) + if i > 0 { tl.get(i - 1, w) } else { 0 };
        if lhs != rhs {
            splitting_failures.push((i, w, lhs, rhs));
        }
    }
    Ok(SplittingReport { colon, expected_colon, intersection, expected_intersection, splitting_failures })
}

/// Predicted `β_{i,i+d}` of the final ideal and `pd(S/J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandPrediction {
    pub strand: Vec<u64>,
    pub pd: usize,
}

/// `β_{i,i+d}(J) = β_{i,i+d}(I) + Σ_k Σ_{j<|A_k|} C(t_k + s_k + j, i)` and
/// `pd(S/J) = max{pd(S/I), t_k + s_k + |A_k|}`.
pub fn predicted_linear_strand(seq: &RemovalSequence, base_table: &BettiTable) -> Result<StrandPrediction> {
    let replay = verify_removal_sequence(seq)?;
    let d = seq.base.d();
    let mut strand = base_table.linear_strand(d);
    let mut pd = base_table.pd_quotient();
    for m in &replay.meta {
        let top = m.t + m.s + m.size;
        pd = pd.max(top);
        if strand.len() < top {
            strand.resize(top, 0);
        }
        for j in 0..m.size {
            let a = (m.t + m.s + j) as u64;
            for (i, slot) in strand.iter_mut().enumerate().take(a as usize + 1) {
                *slot += binomial(a, i as u64);
            }
        }
    }
    while strand.last() == Some(&0) {
        strand.pop();
    }
    Ok(StrandPrediction { strand, pd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::RemovalStep;

    fn ideal(n: u32, gens: &[&[u32]]) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(n, gens.iter().map(|g| Face::of(g)).collect()).unwrap()
    }

    #[test]
    fn delta_from_zero_ideal() {
        let z = SquarefreeMonomialIdeal::zero(4);
        let d = predicted_delta(&z, Face::of(&[1, 2]), Face::of(&[1, 2, 3])).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries.get(&(0, Face::of(&[1, 2, 3]))), Some(&1));
    }

    #[test]
    fn delta_with_one_colon_variable() {
        let i = ideal(4, &[&[1, 2, 4]]);
        let e = Face::of(&[1, 4]);
        let f = Face::of(&[1, 3, 4]);
        let d = predicted_delta(&i, e, f).unwrap();
        assert_eq!(d.entries.len(), 2);
        assert_eq!(d.entries.get(&(1, Face::full(4))), Some(&1));
        let before = betti_table(&i, FieldSpec::Rationals).unwrap();
        let after = betti_table(&i.with_generator(f).unwrap(), FieldSpec::Rationals).unwrap();
        assert_eq!(before.apply_delta(&d).unwrap(), after);
    }

    #[test]
    fn delta_rejects_bad_input() {
        let i = ideal(4, &[&[1, 2, 4]]);
        assert!(matches!(predicted_delta(&i, Face::of(&[2, 3]), Face::of(&[1, 3, 4])), Err(Error::BadExtension { .. })));
        assert!(matches!(predicted_delta(&i, Face::of(&[1, 2]), Face::of(&[1, 2, 4])), Err(Error::AlreadyInIdeal(_))));
    }

    #[test]
    fn splitting_small() {
        let i = ideal(4, &[&[1, 2, 4]]);
        let r = splitting_check(&i, Face::of(&[1, 4]), Face::of(&[1, 3, 4]), FieldSpec::Rationals).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.intersection, ideal(4, &[&[1, 2, 3, 4]]));
        let z = SquarefreeMonomialIdeal::zero(4);
        let r = splitting_check(&z, Face::of(&[1, 2]), Face::of(&[1, 2, 3]), FieldSpec::Rationals).unwrap();
        assert!(r.holds() && r.intersection.is_zero());
    }

    #[test]
    fn strand_one_step() {
        let base = UniformClutter::complete(4, 3).unwrap();
        let seq = RemovalSequence::new(
            base,
            vec![RemovalStep::new(Face::of(&[1, 4]), vec![Face::of(&[1, 2, 4]), Face::of(&[1, 3, 4])])],
        );
        let p = predicted_linear_strand(&seq, &BettiTable::new(4)).unwrap();
        assert_eq!(p.strand, vec![2, 1]);
        assert_eq!(p.pd, 2);
    }
}
