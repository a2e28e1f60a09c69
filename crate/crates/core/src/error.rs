use thiserror::Error;

use crate::face::Face;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("vertex {0} repeated")]
    RepeatedVertex(u32),

    #[error("ground set of size {0} is not supported (1..=64)")]
    GroundSetSize(u32),

    #[error("circuit {circuit} has {found} vertices, expected {expected}")]
    NotUniform { circuit: Face, found: usize, expected: usize },

    #[error("circuit {0} listed twice")]
    DuplicateCircuit(Face),

    #[error("{0} is a (d-1)-subset only when it has {1} vertices")]
    SubcircuitSize(Face, usize),

    #[error("skeleton dimension {requested} outside [-1, {dim}]")]
    SkeletonDimension { requested: i64, dim: i64 },

    #[error("join of complexes with overlapping vertex sets (shared {0})")]
    OverlappingJoin(Face),

    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,

    #[error("component degree {t} is below the maximal generator degree {d}")]
    ComponentDegree { t: usize, d: usize },

    #[error("{what}: n = {n} exceeds the guard {limit}")]
    TooLarge { what: &'static str, n: u32, limit: u32 },

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("operation needs a nonzero ideal")]
    ZeroIdeal,

    #[error("{e} is not simplicial over the clutter")]
    NotSimplicial { e: Face },

    #[error("{circuit} is not a circuit of the clutter containing {e}")]
    InvalidCircuits { e: Face, circuit: Face },

    #[error("removal step has no circuits")]
    EmptyRemoval,

    #[error("step {index}: {source}")]
    StepFailed { index: usize, source: Box<Error> },

    #[error("x_F for F = {0} already lies in the ideal")]
    AlreadyInIdeal(Face),

    #[error("F = {f} is not e = {e} plus a neighbour of e")]
    BadExtension { e: Face, f: Face },

    #[error("ideal is not square-free stable")]
    NotStable,

    #[error("integer overflow during exact elimination")]
    Overflow,

    #[error("field kind not allowed here: {0}")]
    FieldNotAllowed(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("clutters live on different ground sets or sizes")]
    Mismatch,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),

    #[error("fixture '{name}' failed validation: {msg}")]
    FixtureInvalid { name: String, msg: String },

    #[error("{0}")]
    Invalid(String),
}
