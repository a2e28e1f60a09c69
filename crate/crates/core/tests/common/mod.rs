//! Oracles that share no code with the library's homology or Betti engines.
//!
//! Betti numbers come from the upper Koszul complex
//! `K^W(I) = {F ⊆ W : x_{W∖F} ∈ I}` with `β_{i,W}(I) = dim H̃_{i-1}(K^W(I))`,
//! a different simplicial model from the one Hochster's formula uses.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use clutterbetti::{Face, SquarefreeMonomialIdeal};

/// `None` means ℚ.
pub type Field = Option<u64>;

fn in_ideal(gens: &[u64], m: u64) -> bool {
    gens.iter().any(|&g| g & !m == 0)
}

fn subsets_of(mask: u64) -> Vec<u64> {
    let mut out = vec![0u64];
    let mut s = mask;
    while s != 0 {
        out.push(s);
        s = (s - 1) & mask;
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank over ℚ by cross-multiplying rows and dividing each by its content.
pub fn rank_q(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let mut g = 0;
            for j in c..cols {
                let v = a.checked_mul(m[i][j]).and_then(|x| b.checked_mul(m[r][j]).and_then(|y| x.checked_sub(y)));
                m[i][j] = v.expect("oracle overflow");
                g = gcd(g, m[i][j]);
            }
            if g > 1 {
                m[i][c..].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
    }
    r
}

pub fn rank_p(m: &[Vec<i128>], p: u64) -> usize {
    let p = p as i128;
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let mut inv = 1i128;
        let (mut base, mut e) = (a[r][c], p - 2);
        while e > 0 {
            if e & 1 == 1 {
                inv = inv * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        for j in c..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn rank(m: Vec<Vec<i128>>, field: Field) -> usize {
    match field {
        None => rank_q(m),
        Some(p) => rank_p(&m, p),
    }
}

/// Reduced homology ranks of a complex given by all its faces as bitmasks,
/// indexed by dimension `k - 1`. Empty input is the void complex.
pub fn reduced_betti(faces: &[u64], field: Field) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let by_size: Vec<Vec<u64>> = (0..=top + 1)
        .map(|k| {
            let mut v: Vec<u64> = faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect();
            v.sort_unstable();
            v
        })
        .collect();
    // boundary from size k to size k-1
    let bd_rank = |k: usize| -> usize {
        if k == 0 || k > top || by_size[k].is_empty() || by_size[k - 1].is_empty() {
            return 0;
        }
        let index: BTreeMap<u64, usize> = by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0i128; by_size[k].len()]; by_size[k - 1].len()];
        for (col, &f) in by_size[k].iter().enumerate() {
            let mut sign = 1i128;
            let mut bits = f;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                m[index[&(f & !b)]][col] = sign;
                sign = -sign;
                bits &= bits - 1;
            }
        }
        rank(m, field)
    };
    (0..=top).map(|k| by_size[k].len() - bd_rank(k) - bd_rank(k + 1)).collect()
}

/// Every nonzero `β_{i,W}(I)` keyed by `(i, W bits)`.
pub fn koszul_betti(ideal: &SquarefreeMonomialIdeal, field: Field) -> BTreeMap<(usize, u64), u64> {
    let gens: Vec<u64> = ideal.generators().iter().map(|g| g.bits()).collect();
    let full = if ideal.n() == 64 { u64::MAX } else { (1u64 << ideal.n()) - 1 };
    let mut out = BTreeMap::new();
    for w in subsets_of(full) {
        if !in_ideal(&gens, w) {
            continue;
        }
        let k: Vec<u64> = subsets_of(w).into_iter().filter(|&f| in_ideal(&gens, w & !f)).collect();
        for (idx, &b) in reduced_betti(&k, field).iter().enumerate() {
            // idx = dim + 1 = i
            if b > 0 {
                out.insert((idx, w), b as u64);
            }
        }
    }
    out
}

pub fn table_map(t: &clutterbetti::BettiTable) -> BTreeMap<(usize, u64), u64> {
    t.entries().map(|(i, w, c)| ((i, w.bits()), c)).collect()
}

/// Graded `β_{i,i+d}` read off an oracle map, trailing zeros trimmed.
pub fn oracle_strand(m: &BTreeMap<(usize, u64), u64>, d: usize) -> Vec<u64> {
    let top = m.keys().map(|k| k.0).max();
    let Some(top) = top else { return Vec::new() };
    let mut v: Vec<u64> = (0..=top)
        .map(|i| m.iter().filter(|((j, w), _)| *j == i && w.count_ones() as usize == i + d).map(|(_, c)| c).sum())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn oracle_pd_quotient(m: &BTreeMap<(usize, u64), u64>) -> usize {
    m.keys().map(|k| k.0 + 1).max().unwrap_or(0)
}

pub fn oracle_reg(m: &BTreeMap<(usize, u64), u64>) -> Option<usize> {
    m.keys().map(|(i, w)| w.count_ones() as usize - i).max()
}

pub fn face(v: &[u32]) -> Face {
    Face::of(v)
}
