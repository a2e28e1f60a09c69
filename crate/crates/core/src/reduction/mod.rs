//! Simplicial removal steps and the Betti formulas they satisfy.
//!
//! A step `(e, A)` removes a nonempty set `A` of circuits through a simplicial
//! `(d-1)`-set `e`. On ideals this adds the generators `x_F`, `F ∈ A`, to
//! `I(C̄)`, and the Betti table changes only on the linear strand.

mod formulas;
mod proposition;
mod search;
mod stable;

use serde::{Deserialize, Serialize};

use crate::clutter::UniformClutter;
use crate::error::{Error, Result};
use crate::face::Face;

pub use formulas::{predicted_delta, predicted_linear_strand, splitting_check, SplittingReport, StrandPrediction};
pub use proposition::{proposition24_check, proposition44_check, Prop24Report, Prop44Report};
pub use search::{
    chordality_search, chordality_search_with_budget, subclutter_search, subclutter_search_with_budget, ChordalMode,
};
pub use stable::{ek_betti, is_squarefree_stable, stable_closure, stable_to_sequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalStep {
    pub e: Face,
    /// Circuits removed; each contains `e`.
    pub circuits: Vec<Face>,
}

impl RemovalStep {
    pub fn new(e: Face, circuits: Vec<Face>) -> Self {
        RemovalStep { e, circuits }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalSequence {
    pub base: UniformClutter,
    pub steps: Vec<RemovalStep>,
}

/// Per-step bookkeeping for the linear-strand formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepMeta {
    /// Number of `i ∉ e_k` with `e_k ∪ {i}` a generator of the base ideal.
    pub s: usize,
    /// Circuits removed by earlier steps that contain `e_k`.
    pub t: usize,
    /// `|A_k|`.
    pub size: usize,
}

/// Every intermediate clutter, base first, with the step metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub stages: Vec<UniformClutter>,
    pub meta: Vec<StepMeta>,
}

impl Replay {
    pub fn result(&self) -> &UniformClutter {
        self.stages.last().expect("replay holds at least the base")
    }
}

/// `C ∖ A`, after checking that `e` is simplicial and `A` sits over `e`.
pub fn apply_removal_step(c: &UniformClutter, step: &RemovalStep) -> Result<UniformClutter> {
    if step.circuits.is_empty() {
        return Err(Error::EmptyRemoval);
    }
    if !c.is_simplicial(step.e)? {
        return Err(Error::NotSimplicial { e: step.e });
    }
    for (k, &f) in step.circuits.iter().enumerate() {
        if !step.e.is_proper_subset(f) || !c.contains(f) || step.circuits[..k].contains(&f) {
            return Err(Error::InvalidCircuits { e: step.e, circuit: f });
        }
    }
    Ok(c.without_circuits(&step.circuits))
}

impl RemovalSequence {
    pub fn new(base: UniformClutter, steps: Vec<RemovalStep>) -> Self {
        RemovalSequence { base, steps }
    }

    /// The same removals, one circuit per step, in order.
    pub fn singletons(&self) -> RemovalSequence {
        let steps = self.steps.iter().flat_map(|s| s.circuits.iter().map(move |&f| RemovalStep::new(s.e, vec![f]))).collect();
        RemovalSequence::new(self.base.clone(), steps)
    }

    pub fn removed(&self) -> Vec<Face> {
        self.steps.iter().flat_map(|s| s.circuits.iter().copied()).collect()
    }
}

/// Replays all steps, failing at the first invalid one.
pub fn verify_removal_sequence(seq: &RemovalSequence) -> Result<Replay> {
    let base_ideal = seq.base.circuit_ideal_of_complement();
    let mut stages = vec![seq.base.clone()];
    let mut meta = Vec::with_capacity(seq.steps.len());
    let mut removed: Vec<Face> = Vec::new();
    for (index, step) in seq.steps.iter().enumerate() {
        let cur = stages.last().expect("nonempty");
        let next = apply_removal_step(cur, step).map_err(|source| Error::StepFailed { index, source: Box::new(source) })?;
        let s = Face::full(seq.base.n()).difference(step.e).iter().filter(|&i| base_ideal.contains(step.e.with(i))).count();
        let t = removed.iter().filter(|f| step.e.is_subset(**f)).count();
        meta.push(StepMeta { s, t, size: step.circuits.len() });
        removed.extend_from_slice(&step.circuits);
        stages.push(next);
    }
    Ok(Replay { stages, meta })
}
