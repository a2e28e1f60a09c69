//! Text and JSON formats for clutters, ideals, complexes and Betti tables.
//!
//! Text: a header line (`n d` for clutters, `n` otherwise), then one face per
//! line as space-separated 1-based vertices. `#` starts a comment; blank lines
//! are ignored. Input whose first non-blank character is `{` is read as JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::clutter::UniformClutter;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::ideal::SquarefreeMonomialIdeal;

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), msg: e.to_string() }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn numbers(line: usize, s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|tok| tok.parse::<u32>().map_err(|_| Error::Parse { line, msg: format!("'{tok}' is not a vertex number") }))
        .collect()
}

fn face_at(line: usize, s: &str, n: u32) -> Result<Face> {
    let vs = numbers(line, s)?;
    for &v in &vs {
        if v == 0 || v > n {
            return Err(Error::Parse { line, msg: format!("vertex {v} outside [1, {n}]") });
        }
    }
    Face::from_vertices(&vs).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

/// Header values, then each face with its line number.
type Parsed = (Vec<u32>, Vec<(usize, Face)>);

fn parse_faces(text: &str, header_len: usize) -> Result<Parsed> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let head = numbers(hl, header)?;
    if head.len() != header_len {
        let want = if header_len == 2 { "\"n d\"" } else { "\"n\"" };
        return Err(Error::Parse { line: hl, msg: format!("header must be {want}") });
    }
    let n = head[0];
    if n == 0 || n > 64 {
        return Err(Error::Parse { line: hl, msg: format!("ground set size {n} outside 1..=64") });
    }
    let faces = lines.map(|(k, s)| face_at(k, s, n).map(|f| (k, f))).collect::<Result<_>>()?;
    Ok((head, faces))
}

pub fn parse_clutter(text: &str) -> Result<UniformClutter> {
    if is_json(text) {
        return serde_json::from_str(text).map_err(json_err);
    }
    let (head, faces) = parse_faces(text, 2)?;
    let (n, d) = (head[0], head[1] as usize);
    let mut seen = std::collections::HashSet::new();
    for &(line, f) in &faces {
        if f.len() != d {
            return Err(Error::Parse { line, msg: format!("circuit {f} has {} vertices, expected {d}", f.len()) });
        }
        if !seen.insert(f) {
            return Err(Error::Parse { line, msg: format!("circuit {f} listed twice") });
        }
    }
    UniformClutter::new(n, d, faces.into_iter().map(|(_, f)| f).collect())
}

pub fn parse_ideal(text: &str) -> Result<SquarefreeMonomialIdeal> {
    if is_json(text) {
        return serde_json::from_str(text).map_err(json_err);
    }
    let (head, faces) = parse_faces(text, 1)?;
    SquarefreeMonomialIdeal::new(head[0], faces.into_iter().map(|(_, f)| f).collect())
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if is_json(text) {
        return serde_json::from_str(text).map_err(json_err);
    }
    let (head, faces) = parse_faces(text, 1)?;
    SimplicialComplex::new(head[0], faces.into_iter().map(|(_, f)| f).collect())
}

fn face_line(f: Face) -> String {
    f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn emit_clutter(c: &UniformClutter) -> String {
    let mut s = format!("{} {}\n", c.n(), c.d());
    for &f in c.circuits() {
        s.push_str(&face_line(f));
        s.push('\n');
    }
    s
}

/// The unit ideal's generator `∅` is written as an empty line, which the
/// text reader skips; use JSON for it.
pub fn emit_ideal(i: &SquarefreeMonomialIdeal) -> String {
    let mut s = format!("{}\n", i.n());
    for &g in i.generators() {
        s.push_str(&face_line(g));
        s.push('\n');
    }
    s
}

/// Same caveat as [`emit_ideal`] for the empty complex.
pub fn emit_complex(c: &SimplicialComplex) -> String {
    let mut s = format!("{}\n", c.n());
    for &f in c.facets() {
        s.push_str(&face_line(f));
        s.push('\n');
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Tsv,
    Json,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    i: usize,
    #[serde(rename = "W")]
    w: Face,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    n: u32,
    entries: Vec<JsonEntry>,
}

/// TSV is the Betti diagram of `S/I`: row `r` column `i` holds `β_{i,i+r}(S/I)`.
/// JSON lists `(i, W, count)` with `i` the homological index of `I`.
pub fn emit_betti_table(table: &BettiTable, format: TableFormat) -> String {
    match format {
        TableFormat::Json => {
            let entries = table.entries().map(|(i, w, count)| JsonEntry { i, w, count }).collect();
            let mut s = serde_json::to_string_pretty(&JsonTable { n: table.n(), entries }).expect("plain data");
            s.push('\n');
            s
        }
        TableFormat::Tsv => {
            if table.is_empty() {
                return "empty\n".to_string();
            }
            let graded = table.graded();
            let pd = table.pd_quotient();
            let reg = table.reg_quotient().unwrap_or(0);
            let quotient = |i: usize, j: usize| -> u64 {
                if i == 0 {
                    u64::from(j == 0)
                } else {
                    graded.get(&(i - 1, j)).copied().unwrap_or(0)
                }
            };
            let mut s = String::from("j-i");
            for i in 0..=pd {
                let _ = write!(s, "\t{i}");
            }
            s.push('\n');
            for r in 0..=reg {
                let _ = write!(s, "{r}");
                for i in 0..=pd {
                    match quotient(i, i + r) {
                        0 => s.push_str("\t."),
                        b => {
                            let _ = write!(s, "\t{b}");
                        }
                    }
                }
                s.push('\n');
            }
            s.push_str("total");
            for i in 0..=pd {
                let tot: u64 = (0..=reg).map(|r| quotient(i, i + r)).sum();
                let _ = write!(s, "\t{tot}");
            }
            s.push('\n');
            s
        }
    }
}

pub fn parse_betti_table_json(text: &str) -> Result<BettiTable> {
    let t: JsonTable = serde_json::from_str(text).map_err(json_err)?;
    let mut out = BettiTable::new(t.n);
    for e in t.entries {
        if e.w.max_vertex().is_some_and(|m| m > t.n) {
            return Err(Error::VertexOutOfRange { vertex: e.w.max_vertex().unwrap_or(0), n: t.n });
        }
        out.add(e.i, e.w, e.count);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_table;
    use crate::homology::FieldSpec;

    #[test]
    fn figure1_d_text() {
        let c = parse_clutter("5 3\n1 2 3\n1 2 4\n1 3 4\n2 3 5\n2 4 5\n3 4 5").unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(parse_clutter(&emit_clutter(&c)).unwrap(), c);
    }

    #[test]
    fn json_clutter() {
        let c = parse_clutter(r#"{"n":4,"d":3,"circuits":[[1,2,3]]}"#).unwrap();
        assert_eq!(c.circuits(), &[Face::of(&[1, 2, 3])]);
        let back = serde_json::to_string(&c).unwrap();
        assert_eq!(parse_clutter(&back).unwrap(), c);
    }

    #[test]
    fn parse_errors_carry_lines() {
        match parse_clutter("4 2\n# comment\n1 2\n3 3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        match parse_clutter("4 2\n1 2\n\n1 5\n") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("outside"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_clutter("4 2\n1 2\n2 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_clutter("4 2\n1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_clutter("4\n1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_clutter(r#"{"n":4,"d":3,"circuits":[[1,1,2]]}"#), Err(Error::Parse { .. })));
    }

    #[test]
    fn ideal_and_complex_round_trip() {
        let i = parse_ideal("5\n1 4 5\n2 3 5\n").unwrap();
        assert_eq!(parse_ideal(&emit_ideal(&i)).unwrap(), i);
        let c = parse_complex("4\n1 2 3\n3 4\n").unwrap();
        assert_eq!(parse_complex(&emit_complex(&c)).unwrap(), c);
        let j = serde_json::to_string(&i).unwrap();
        assert_eq!(parse_ideal(&j).unwrap(), i);
    }

    #[test]
    fn betti_emission() {
        let i = parse_ideal("3\n1 2\n1 3\n2 3\n").unwrap();
        let t = betti_table(&i, FieldSpec::Rationals).unwrap();
        let tsv = emit_betti_table(&t, TableFormat::Tsv);
        assert_eq!(tsv, "j-i\t0\t1\t2\n0\t1\t.\t.\n1\t.\t3\t2\ntotal\t1\t3\t2\n");
        let json = emit_betti_table(&t, TableFormat::Json);
        assert_eq!(parse_betti_table_json(&json).unwrap(), t);
        assert_eq!(emit_betti_table(&BettiTable::new(3), TableFormat::Tsv), "empty\n");
    }
}
