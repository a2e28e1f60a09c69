//! Built-in worked instances, embedded at compile time.
//!
//! Every fixture carries a SHA-256 of its source text and declared sizes;
//! [`load`] checks both before returning, so a corrupted or edited file is
//! reported as [`Error::FixtureInvalid`] rather than silently used.
//! `complete-N-D` names the complete `D`-uniform clutter on `N` vertices.

use sha2::{Digest, Sha256};

use crate::clutter::UniformClutter;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{free_faces, homology_profile, FieldSpec};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::io;
use crate::reduction::{RemovalSequence, RemovalStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Clutter,
    Ideal,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Clutter(UniformClutter),
    Ideal(SquarefreeMonomialIdeal),
    Complex(SimplicialComplex),
}

impl Fixture {
    pub fn kind(&self) -> FixtureKind {
        match self {
            Fixture::Clutter(_) => FixtureKind::Clutter,
            Fixture::Ideal(_) => FixtureKind::Ideal,
            Fixture::Complex(_) => FixtureKind::Complex,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FixtureEntry {
    pub name: &'static str,
    pub kind: FixtureKind,
    pub description: &'static str,
    pub text: &'static str,
    sha256: &'static str,
    n: u32,
    /// Uniformity for clutters.
    d: Option<usize>,
    /// Circuits, generators or facets.
    count: usize,
}

macro_rules! entry {
    ($name:literal, $kind:ident, $desc:literal, $sha:literal, $n:expr, $d:expr, $count:expr) => {
        FixtureEntry {
            name: $name,
            kind: FixtureKind::$kind,
            description: $desc,
            text: include_str!(concat!("../fixtures/", $name, ".txt")),
            sha256: $sha,
            n: $n,
            d: $d,
            count: $count,
        }
    };
}

pub const CATALOG: &[FixtureEntry] = &[
    entry!(
        "figure1-c",
        Clutter,
        "chordal 3-uniform clutter on 6 vertices",
        "b79d719f438215802b2b486a1f0d6772d1c4e2270d7fc2ea790628b55143b166",
        6,
        Some(3),
        8
    ),
    entry!(
        "figure1-d",
        Clutter,
        "3-uniform clutter with no simplicial maximal subcircuit",
        "e569687bf6efdb07d05f7de50955b566fb27a50de165f14c5ae8b25d91a3e7ee",
        5,
        Some(3),
        6
    ),
    entry!(
        "figure2-graph-g",
        Clutter,
        "graph reduced to G3 by three removal steps",
        "023b4f332d0149b180d1bb7781e79ad36236856e1dcd9d9710ad63ef63735ac7",
        9,
        Some(2),
        13
    ),
    entry!(
        "figure2-graph-g1",
        Clutter,
        "G after the first step",
        "51a901732171cfae866b67c13c5a4a0044f3c22e1e44bc871f17ae372a50ac7b",
        9,
        Some(2),
        11
    ),
    entry!(
        "figure2-graph-g2",
        Clutter,
        "G after the second step",
        "7ba500ca97e640d38feda9be246ecd99d6fabc82592b9e8cefed92ae1d9bdab0",
        9,
        Some(2),
        9
    ),
    entry!(
        "figure2-graph-g3",
        Clutter,
        "G after the third step",
        "5efb625ea99393164925e6327bf242603692b752ad9a5571f07d178cfae2d9d5",
        9,
        Some(2),
        8
    ),
    entry!(
        "example1-ideal",
        Ideal,
        "(x1x4x5, x2x3x5), grown by x3x4x5",
        "a29be16892d6d681333952a8388e02084eced54684054a3b98c9e1052be0541f",
        5,
        None,
        2
    ),
    entry!(
        "bowtie",
        Clutter,
        "two triangles sharing a vertex",
        "f6251fb7b933710a37f0f862fab3a612128335022a03c5aa7ac1a804bf2684f2",
        5,
        Some(2),
        6
    ),
    entry!(
        "five-cycle",
        Ideal,
        "edge ideal of the 5-cycle",
        "b680790090971e5ad899927b1e6f2516a61bea1d312e6854c800208ec56bb2f6",
        5,
        None,
        5
    ),
    entry!(
        "dunce-hat",
        Complex,
        "contractible 2-complex without free faces",
        "d5b18ac1c1a90cd6e76a1348fd25977390c52ff5089e5da22ad71bd530bb7a9c",
        8,
        None,
        17
    ),
    entry!(
        "bing-house",
        Complex,
        "house with two rooms",
        "24cf6f185e8c74ba70dc2c156f826b6a9f6f45387331ed2f40f74f564ee5bbe1",
        12,
        None,
        33
    ),
    entry!(
        "rp2-test",
        Complex,
        "6-vertex real projective plane",
        "60140d49650bf0338b89688debfb554360fa5b31341599cf143aae7bee649710",
        6,
        None,
        10
    ),
    entry!(
        "stable-five",
        Ideal,
        "square-free stable ideal with five cubic generators",
        "a274ed0b6c4b0bc2f6b91abf34b080d4af5b60faa64ef1b99807f2a280d716e6",
        5,
        None,
        5
    ),
];

/// Complexes that must be pure and free-face-free.
const NO_FREE_FACE: &[&str] = &["dunce-hat", "bing-house"];
/// Of those, the ones whose integral reduced homology must vanish. The
/// verbatim two-room house list has `χ = 2` (`H̃_2 = ℤ`), so it is only
/// gated on the combinatorial conditions.
const ACYCLIC: &[&str] = &["dunce-hat"];

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn entry(name: &str) -> Option<&'static FixtureEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

fn invalid(name: &str, msg: impl Into<String>) -> Error {
    Error::FixtureInvalid { name: name.to_string(), msg: msg.into() }
}

fn parse_complete(name: &str) -> Option<Result<Fixture>> {
    let rest = name.strip_prefix("complete-")?;
    let (n, d) = rest.split_once('-')?;
    let (n, d) = (n.parse::<u32>().ok()?, d.parse::<usize>().ok()?);
    Some(UniformClutter::complete(n, d).map(Fixture::Clutter))
}

fn check(e: &FixtureEntry) -> Result<Fixture> {
    let digest = hex::encode(Sha256::digest(e.text.as_bytes()));
    if digest != e.sha256 {
        return Err(invalid(e.name, format!("checksum {digest} does not match")));
    }
    let wrap = |err: Error| invalid(e.name, err.to_string());
    let (fixture, n, d, count) = match e.kind {
        FixtureKind::Clutter => {
            let c = io::parse_clutter(e.text).map_err(wrap)?;
            let (n, d, k) = (c.n(), Some(c.d()), c.len());
            (Fixture::Clutter(c), n, d, k)
        }
        FixtureKind::Ideal => {
            let i = io::parse_ideal(e.text).map_err(wrap)?;
            let (n, k) = (i.n(), i.generators().len());
            (Fixture::Ideal(i), n, None, k)
        }
        FixtureKind::Complex => {
            let c = io::parse_complex(e.text).map_err(wrap)?;
            let (n, k) = (c.n(), c.facets().len());
            (Fixture::Complex(c), n, None, k)
        }
    };
    if (n, d, count) != (e.n, e.d, e.count) {
        return Err(invalid(
            e.name,
            format!("declared (n, d, count) = ({}, {:?}, {}), found ({n}, {d:?}, {count})", e.n, e.d, e.count),
        ));
    }
    if let Fixture::Complex(c) = &fixture {
        if NO_FREE_FACE.contains(&e.name) {
            if !c.is_pure() {
                return Err(invalid(e.name, "not pure"));
            }
            if let Some(f) = free_faces(c).first() {
                return Err(invalid(e.name, format!("has free face {f}")));
            }
            if ACYCLIC.contains(&e.name) && !homology_profile(c, FieldSpec::Integers).map_err(wrap)?.is_acyclic() {
                return Err(invalid(e.name, "integral reduced homology is nonzero"));
            }
        }
    }
    Ok(fixture)
}

pub fn load(name: &str) -> Result<Fixture> {
    if let Some(r) = parse_complete(name) {
        return r;
    }
    check(entry(name).ok_or_else(|| Error::UnknownFixture(name.to_string()))?)
}

fn wrong_kind(name: &str, want: &str) -> Error {
    invalid(name, format!("not a {want} fixture"))
}

pub fn clutter(name: &str) -> Result<UniformClutter> {
    match load(name)? {
        Fixture::Clutter(c) => Ok(c),
        _ => Err(wrong_kind(name, "clutter")),
    }
}

pub fn ideal(name: &str) -> Result<SquarefreeMonomialIdeal> {
    match load(name)? {
        Fixture::Ideal(i) => Ok(i),
        _ => Err(wrong_kind(name, "ideal")),
    }
}

pub fn complex(name: &str) -> Result<SimplicialComplex> {
    match load(name)? {
        Fixture::Complex(c) => Ok(c),
        _ => Err(wrong_kind(name, "complex")),
    }
}

/// The three steps taking `G` to `G3`.
pub fn figure2_sequence() -> Result<RemovalSequence> {
    let g = clutter("figure2-graph-g")?;
    Ok(RemovalSequence::new(
        g,
        vec![
            RemovalStep::new(Face::of(&[1]), vec![Face::of(&[1, 3]), Face::of(&[1, 5])]),
            RemovalStep::new(Face::of(&[6]), vec![Face::of(&[5, 6]), Face::of(&[6, 7])]),
            RemovalStep::new(Face::of(&[8]), vec![Face::of(&[7, 8])]),
        ],
    ))
}

/// Loads every catalog entry; the first failure wins.
pub fn verify_all() -> Result<()> {
    CATALOG.iter().try_for_each(|e| check(e).map(|_| ()))
}
