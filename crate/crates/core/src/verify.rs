//! Instance checkers and seeded sweeps comparing every closed-form prediction
//! with the Hochster oracle. Each checker returns `Ok(None)` on agreement and a
//! human-readable discrepancy otherwise; errors mean the instance was invalid.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, regularity_by_components, theorem1_stability_check};
use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::FieldSpec;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::reduction::{
    predicted_delta, predicted_linear_strand, proposition24_check, splitting_check, verify_removal_sequence, RemovalSequence,
};
use crate::sampling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verifier {
    Theorem2,
    Splitting,
    Prop24,
    Strand,
    Theorem1,
    Component,
}

impl Verifier {
    pub const ALL: [Verifier; 6] =
        [Verifier::Theorem2, Verifier::Splitting, Verifier::Prop24, Verifier::Strand, Verifier::Theorem1, Verifier::Component];

    pub fn name(self) -> &'static str {
        match self {
            Verifier::Theorem2 => "theorem2",
            Verifier::Splitting => "splitting",
            Verifier::Prop24 => "prop24",
            Verifier::Strand => "strand",
            Verifier::Theorem1 => "theorem1",
            Verifier::Component => "component",
        }
    }
}

impl fmt::Display for Verifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verifier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Verifier::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| Error::Invalid(format!("unknown verifier '{s}'")))
    }
}

/// `β(I + (x_F)) = β(I) + predicted delta`, entrywise.
pub fn check_theorem2(c: &UniformClutter, e: Face, f: Face, field: FieldSpec) -> Result<Option<String>> {
    let i = c.circuit_ideal_of_complement();
    let delta = predicted_delta(&i, e, f)?;
    let actual = betti_table(&i.with_generator(f)?, field)?;
    let base = betti_table(&i, field)?;
    Ok(match base.apply_delta(&delta) {
        Some(predicted) if predicted == actual => None,
        Some(predicted) => Some(format!("e={e} F={f} over {field}: predicted {predicted:?}, oracle {actual:?}")),
        None => Some(format!("e={e} F={f} over {field}: delta drives an entry negative")),
    })
}

pub fn check_splitting(c: &UniformClutter, e: Face, f: Face, field: FieldSpec) -> Result<Option<String>> {
    let r = splitting_check(&c.circuit_ideal_of_complement(), e, f, field)?;
    Ok((!r.holds()).then(|| {
        format!(
            "e={e} F={f} over {field}: colon {} intersection {} splitting failures {:?}",
            r.colon_ok(),
            r.intersection_ok(),
            r.splitting_failures
        )
    }))
}

pub fn check_prop24(c: &UniformClutter, e: Face, f: Face, field: FieldSpec) -> Result<Option<String>> {
    let r = proposition24_check(c, e, f, field)?;
    Ok((!r.holds()).then(|| format!("e={e} F={f} over {field}: {r:?}")))
}

/// Linear strand and `pd` of the final ideal against the formula, and at every
/// stage the entries off the linear strand and the regularity against the base.
pub fn check_strand(seq: &RemovalSequence, field: FieldSpec) -> Result<Option<String>> {
    let replay = verify_removal_sequence(seq)?;
    let d = seq.base.d();
    let base_ideal = seq.base.circuit_ideal_of_complement();
    let base = betti_table(&base_ideal, field)?;
    let above = base.above_strand(d);
    for (k, stage) in replay.stages.iter().enumerate().skip(1) {
        let t = betti_table(&stage.circuit_ideal_of_complement(), field)?;
        if t.above_strand(d) != above {
            return Ok(Some(format!("stage {k}: entries off the linear strand changed")));
        }
        if !base_ideal.is_zero() && t.reg() != base.reg() {
            return Ok(Some(format!("stage {k}: reg {:?} differs from base reg {:?}", t.reg(), base.reg())));
        }
    }
    let last = betti_table(&replay.result().circuit_ideal_of_complement(), field)?;
    let p = predicted_linear_strand(seq, &base)?;
    let (strand, pd) = (last.linear_strand(d), last.pd_quotient());
    Ok((p.strand != strand || p.pd != pd)
        .then(|| format!("predicted strand {:?} pd {}, oracle strand {strand:?} pd {pd}", p.strand, p.pd)))
}

/// No difference above `|W| = d + i + r`.
pub fn check_theorem1(i: &SquarefreeMonomialIdeal, f: Face, field: FieldSpec) -> Result<Option<String>> {
    let r = theorem1_stability_check(i, f, field)?;
    Ok((!r.holds()).then(|| format!("I={i} F={f}: violations {:?}", r.violations)))
}

pub fn check_component(i: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<Option<String>> {
    let by_components = regularity_by_components(i, field)?;
    let oracle = betti_table(i, field)?.reg().ok_or(Error::ZeroIdeal)?;
    Ok((by_components != oracle).then(|| format!("I={i}: components give {by_components}, oracle {oracle}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub verifier: Verifier,
    pub seed: u64,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepParams {
    pub seed: u64,
    pub n: u32,
    pub d: usize,
    pub trials: usize,
    pub field: FieldSpec,
}

/// Runs `trials` random instances; the removal-based verifiers use `(n, d)`,
/// the ideal-based ones use `n` only.
pub fn sweep(verifier: Verifier, p: SweepParams) -> Result<SweepReport> {
    if p.d < 2 || p.d as u32 > p.n {
        return Err(Error::Invalid(format!("need 2 ≤ d ≤ n, got n={} d={}", p.n, p.d)));
    }
    let mut rng = sampling::rng(p.seed);
    let mut failures = Vec::new();
    for _ in 0..p.trials {
        let outcome = match verifier {
            Verifier::Theorem2 | Verifier::Splitting | Verifier::Prop24 => {
                let (c, e, f) = sampling::random_single_removal(&mut rng, p.n, p.d);
                match verifier {
                    Verifier::Theorem2 => check_theorem2(&c, e, f, p.field)?,
                    Verifier::Splitting => check_splitting(&c, e, f, p.field)?,
                    _ => check_prop24(&c, e, f, p.field)?,
                }
            }
            Verifier::Strand => {
                let base = if rng.gen_bool(0.5) {
                    UniformClutter::complete(p.n, p.d)?
                } else {
                    sampling::random_single_removal(&mut rng, p.n, p.d).0
                };
                let seq = sampling::random_removal_sequence(&mut rng, &base, 6);
                check_strand(&seq, p.field)?
            }
            Verifier::Theorem1 => {
                let (i, f) = loop {
                    let (i, f) = sampling::random_equigenerated_with_extra(&mut rng, p.n, p.d);
                    if !i.colon(f).is_zero() {
                        break (i, f);
                    }
                };
                check_theorem1(&i, f, p.field)?
            }
            Verifier::Component => {
                let i = sampling::random_nonequigenerated_ideal(&mut rng, p.n);
                check_component(&i, p.field)?
            }
        };
        failures.extend(outcome);
    }
    Ok(SweepReport { verifier, seed: p.seed, trials: p.trials, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for v in Verifier::ALL {
            let p = SweepParams { seed: 3, n: 5, d: 2, trials: 5, field: FieldSpec::Rationals };
            let r = sweep(v, p).unwrap();
            assert!(r.passed(), "{v}: {:?}", r.failures);
        }
    }

    #[test]
    fn verifier_names_round_trip() {
        for v in Verifier::ALL {
            assert_eq!(v.name().parse::<Verifier>().unwrap(), v);
        }
        assert!("bogus".parse::<Verifier>().is_err());
    }
}
