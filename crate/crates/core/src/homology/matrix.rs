//! Dense exact integer matrices: rank over ℚ and GF(p), Smith normal form.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Exact product; panics on shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn to_i128_rows(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&x| x as i128).collect()).collect()
    }
}

/// Rank over ℚ by fraction-free elimination. Falls back to big integers on overflow.
pub fn rank_rational(m: &IntMatrix) -> usize {
    match bareiss_i128(m.to_i128_rows(), m.cols) {
        Some(r) => r,
        None => bareiss_big(m),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let rows = a.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // smallest nonzero magnitude keeps intermediate minors small
        let pivot = (r..rows).filter(|&i| a[i][c] != 0).min_by_key(|&i| a[i][c].unsigned_abs());
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        let pv = a[r][c];
        for i in r + 1..rows {
            let f = a[i][c];
            for j in c + 1..cols {
                let x = a[i][j].checked_mul(pv)?.checked_sub(f.checked_mul(a[r][j])?)?;
                a[i][j] = x / prev;
            }
            a[i][c] = 0;
        }
        prev = pv;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(m: &IntMatrix) -> usize {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let zero = BigInt::from(0);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != zero) else { continue };
        a.swap(r, p);
        let pv = a[r][c].clone();
        for i in r + 1..rows {
            let f = a[i][c].clone();
            for j in c + 1..cols {
                let x = &a[i][j] * &pv - &f * &a[r][j];
                a[i][j] = x / &prev;
            }
            a[i][c] = zero.clone();
        }
        prev = pv;
        r += 1;
    }
    r
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rank over GF(p). `p` must be prime.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pm = p as i128;
    let mut a: Vec<Vec<u64>> =
        (0..m.rows).map(|i| m.row(i).iter().map(|&x| (x as i128).rem_euclid(pm) as u64).collect()).collect();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(piv) = (r..m.rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for i in r + 1..m.rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mul(a[i][c], inv);
            for j in c..m.cols {
                let sub = mul(f, a[r][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
pub fn smith_invariants(m: &IntMatrix) -> Result<Vec<u128>> {
    let mut a = m.to_i128_rows();
    let rows = m.rows;
    let cols = m.cols;
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].unsigned_abs() < a[bi][bj].unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            let pv = a[t][t];
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(pv);
                    for j in t..cols {
                        a[i][j] = a[i][j].checked_sub(q.checked_mul(a[t][j]).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(pv);
                    for row in a.iter_mut().skip(t) {
                        row[j] = row[j].checked_sub(q.checked_mul(row[t]).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                    }
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // divisibility: pull a non-multiple into the pivot row
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % pv != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] = a[t][j].checked_add(a[i][j]).ok_or(Error::Overflow)?;
                        }
                    }
                }
            }
            // restore the smallest entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].unsigned_abs() < a[best.0][best.1].unsigned_abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].unsigned_abs() < a[best.0][best.1].unsigned_abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            }
            if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].unsigned_abs());
        t += 1;
    }
    Ok(diag)
}
