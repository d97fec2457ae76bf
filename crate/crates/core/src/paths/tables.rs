use std::fmt;

use super::PathWeights;
use crate::coeffs::{Coeff, Domain};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    J,
    S,
    Sprime,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::J => "J",
            TableKind::S => "S",
            TableKind::Sprime => "Sprime",
        })
    }
}

/// Lower-triangular `T_{n,k}`, `0 ≤ k ≤ n ≤ N`; row `n` has `n + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularTable {
    pub kind: TableKind,
    pub domain: Domain,
    pub rows: Vec<Vec<Coeff>>,
}

impl TriangularTable {
    /// The largest row index `N`.
    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    /// `T_{n,k}`, zero above the diagonal; `None` past the last row.
    pub fn get(&self, n: usize, k: usize) -> Option<Coeff> {
        let row = self.rows.get(n)?;
        Some(row.get(k).cloned().unwrap_or_else(|| Coeff::zero(&self.domain)))
    }

    pub fn column(&self, k: usize) -> Vec<Coeff> {
        (k..self.rows.len()).map(|n| self.rows[n][k].clone()).collect()
    }
}

/// `J_{n+1,k} = J_{n,k-1} + gamma_k J_{n,k} + beta_{k+1} J_{n,k+1}`, `J_{0,k} = δ_{k0}`.
///
/// Uses `gamma_0..gamma_{N-1}` and `beta_1..beta_{N-1}`.
pub fn jacobi_rogers_table(w: &PathWeights, size: usize) -> Result<TriangularTable> {
    let dom = w.domain().clone();
    let mut rows = vec![vec![Coeff::one(&dom)]];
    for n in 0..size {
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut v = if k >= 1 { prev[k - 1].clone() } else { Coeff::zero(&dom) };
            if k <= n {
                v.add_mul_assign(&w.gamma(k)?, &prev[k]);
            }
            if k < n {
                v.add_mul_assign(&w.beta(k + 1)?, &prev[k + 1]);
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(TriangularTable { kind: TableKind::J, domain: dom, rows })
}

/// `S'_{n,k} = S_{n,k} + alpha_{2k+2} S_{n,k+1}` and
/// `S_{n+1,k} = S'_{n,k-1} + alpha_{2k+1} S'_{n,k}`, `S_{0,k} = δ_{k0}`.
///
/// Uses `alpha_1..alpha_{2N}`.
pub fn stieltjes_tables(w: &PathWeights, size: usize) -> Result<(TriangularTable, TriangularTable)> {
    let dom = w.domain().clone();
    let mut s: Vec<Vec<Coeff>> = vec![vec![Coeff::one(&dom)]];
    let mut sp: Vec<Vec<Coeff>> = Vec::new();
    for n in 0..=size {
        let cur = &s[n];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = cur[k].clone();
            if k < n {
                v.add_mul_assign(&w.alpha(2 * k + 2)?, &cur[k + 1]);
            }
            row.push(v);
        }
        sp.push(row);
        if n < size {
            let p = &sp[n];
            let mut next = Vec::with_capacity(n + 2);
            for k in 0..=n + 1 {
                let mut v = if k >= 1 { p[k - 1].clone() } else { Coeff::zero(&dom) };
                if k <= n {
                    v.add_mul_assign(&w.alpha(2 * k + 1)?, &p[k]);
                }
                next.push(v);
            }
            s.push(next);
        }
    }
    debug_assert_eq!(check_stieltjes_recurrences(w, &s, &sp).ok().flatten(), None);
    Ok((
        TriangularTable { kind: TableKind::S, domain: dom.clone(), rows: s },
        TriangularTable { kind: TableKind::Sprime, domain: dom, rows: sp },
    ))
}

/// Rechecks the single-table recurrences
/// `S_{n+1,k} = S_{n,k-1} + (alpha_{2k} + alpha_{2k+1}) S_{n,k} + alpha_{2k+1} alpha_{2k+2} S_{n,k+1}`
/// and
/// `S'_{n+1,k} = S'_{n,k-1} + (alpha_{2k+1} + alpha_{2k+2}) S'_{n,k} + alpha_{2k+2} alpha_{2k+3} S'_{n,k+1}`
/// on the given rows. Returns the first violated `(table, n + 1, k)`.
pub fn check_stieltjes_recurrences(
    w: &PathWeights,
    s: &[Vec<Coeff>],
    sp: &[Vec<Coeff>],
) -> Result<Option<(TableKind, usize, usize)>> {
    let dom = w.domain();
    let alpha = |i: usize| if i == 0 { Ok(Coeff::zero(dom)) } else { w.alpha(i) };
    for (kind, rows, shift) in [(TableKind::S, s, 0usize), (TableKind::Sprime, sp, 1)] {
        for n in 0..rows.len().saturating_sub(1) {
            let prev = &rows[n];
            for k in 0..=n + 1 {
                let mut v = if k >= 1 { prev[k - 1].clone() } else { Coeff::zero(dom) };
                if k <= n {
                    let g = &alpha(2 * k + shift)? + &alpha(2 * k + 1 + shift)?;
                    v.add_mul_assign(&g, &prev[k]);
                }
                if k < n {
                    let b = &alpha(2 * k + 1 + shift)? * &alpha(2 * k + 2 + shift)?;
                    v.add_mul_assign(&b, &prev[k + 1]);
                }
                if v != rows[n + 1][k] {
                    return Ok(Some((kind, n + 1, k)));
                }
            }
        }
    }
    Ok(None)
}

/// Entry access for the checks that need a missing-row error.
pub(super) fn entry(t: &TriangularTable, n: usize, k: usize) -> Result<Coeff> {
    t.get(n, k).ok_or_else(|| Error::IndexOutOfRange(format!("{}_{{{n},{k}}}", t.kind)))
}
