//! Subadditivity of maximal shifts and the special-shape test on `S/I`.

use serde::{Deserialize, Serialize};

use crate::betti::betti_table;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::ideal::SquarefreeMonomialIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// `t_i(S/I)` for `0 ≤ i ≤ pd(S/I)`.
    pub t: Vec<usize>,
    /// `r_i = t_i - i`.
    pub r: Vec<i64>,
    pub pd: usize,
    /// `reg(S/I)`.
    pub reg: i64,
    /// Smallest `g` with `r_g = reg(S/I)`.
    pub g: usize,
    /// Pairs `(i, j)` with `t_{i+j} > t_i + t_j`.
    pub subadditivity_failures: Vec<(usize, usize)>,
    /// Indices `i < g` with `r_i > r_{i+1}`.
    pub shape_rising_failures: Vec<usize>,
    /// Indices `g ≤ i < pd` with `r_{i+1} > r_i`.
    pub shape_falling_failures: Vec<usize>,
}

impl Diagnostics {
    pub fn subadditive(&self) -> bool {
        self.subadditivity_failures.is_empty()
    }

    pub fn special_shape(&self) -> bool {
        self.shape_rising_failures.is_empty() && self.shape_falling_failures.is_empty()
    }
}

pub fn resolution_diagnostics(ideal: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<Diagnostics> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let table = betti_table(ideal, field)?;
    // minimal resolutions have no gaps: every Tor_i with i ≤ pd is nonzero
    let t: Vec<usize> = table
        .t_vector_quotient()
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Invalid("gap in the resolution".into())))
        .collect::<Result<_>>()?;
    let pd = t.len() - 1;
    let r: Vec<i64> = t.iter().enumerate().map(|(i, &x)| x as i64 - i as i64).collect();
    let reg = *r.iter().max().unwrap_or(&0);
    let g = r.iter().position(|&x| x == reg).unwrap_or(0);
    let mut subadditivity_failures = Vec::new();
    for i in 1..=pd {
        for j in i..=pd - i {
            if t[i + j] > t[i] + t[j] {
                subadditivity_failures.push((i, j));
            }
        }
    }
    let shape_rising_failures = (0..g).filter(|&i| r[i] > r[i + 1]).collect();
    let shape_falling_failures = (g..pd).filter(|&i| r[i + 1] > r[i]).collect();
    Ok(Diagnostics { t, r, pd, reg, g, subadditivity_failures, shape_rising_failures, shape_falling_failures })
}
