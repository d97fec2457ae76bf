//! Integer sequences and q-analogues used by the families.

use std::collections::BTreeMap;

use itertools::Itertools;
use rug::{Complete, Integer};

use crate::coeffs::{Coeff, Domain, Rational};
use crate::error::{Error, Result};

pub fn factorial(n: usize) -> Integer {
    Integer::factorial(n as u32).complete()
}

/// `binom(n, k)` for any integer `n`, so `binom(-1, 0) = 1` and
/// `binom(n-1, n) = 0` for `n ≥ 1`.
pub fn binomial(n: i64, k: usize) -> Integer {
    Integer::from(n).binomial(k as u32)
}

/// `x (x+1) … (x+n-1)`.
pub fn rising(x: &Coeff, n: usize) -> Coeff {
    let dom = x.domain();
    let mut acc = Coeff::one(&dom);
    for i in 0..n {
        acc = &acc * &(x + &Coeff::from_int(&dom, i as i64));
    }
    acc
}

/// Rows `0..=n` of the Stirling subset numbers, from
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2_rows(n: usize) -> Vec<Vec<Integer>> {
    let mut rows = vec![vec![Integer::from(1)]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|k| {
                let mut v = if k >= 1 { prev[k - 1].clone() } else { Integer::new() };
                if k < m {
                    v += Integer::from(k) * &prev[k];
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub(crate) fn q_domain() -> Domain {
    Domain::polynomial(&["q"]).expect("valid name")
}

fn poly_q(dom: &Domain, coeffs: &[Integer]) -> Coeff {
    let q = Coeff::variable(dom, "q").unwrap();
    let mut acc = Coeff::zero(dom);
    for c in coeffs.iter().rev() {
        acc = &(&acc * &q) + &Coeff::from_rational(dom, Rational::from(c));
    }
    acc
}

/// Which q-Pascal rule builds the q-binomial table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QPascal {
    /// `[n, k] = [n-1, k] + q^{n-k} [n-1, k-1]`.
    First,
    /// `[n, k] = q^k [n-1, k] + [n-1, k-1]`.
    Second,
}

/// Coefficient lists (in `q`) of `[m, k]` for `0 ≤ k ≤ m ≤ n`.
fn qbinomial_rows(n: usize, rule: QPascal) -> Vec<Vec<Vec<Integer>>> {
    let shifted_add = |acc: &mut Vec<Integer>, src: &[Integer], s: usize| {
        if acc.len() < src.len() + s {
            acc.resize(src.len() + s, Integer::new());
        }
        for (i, c) in src.iter().enumerate() {
            acc[i + s] += c;
        }
    };
    let mut rows: Vec<Vec<Vec<Integer>>> = vec![vec![vec![Integer::from(1)]]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|k| {
                let mut acc = Vec::new();
                let (s_keep, s_down) = match rule {
                    QPascal::First => (0, m - k),
                    QPascal::Second => (k, 0),
                };
                if k < m {
                    shifted_add(&mut acc, &prev[k], s_keep);
                }
                if k >= 1 {
                    shifted_add(&mut acc, &prev[k - 1], s_down);
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// The Gaussian binomial `[n, k]_q` in `Q[q]`.
pub fn qbinomial(n: usize, k: usize) -> Result<Coeff> {
    qbinomial_with(n, k, QPascal::First)
}

pub fn qbinomial_with(n: usize, k: usize, rule: QPascal) -> Result<Coeff> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("q-binomial [{n}, {k}]")));
    }
    let rows = qbinomial_rows(n, rule);
    Ok(poly_q(&q_domain(), &rows[n][k]))
}

/// `(a; q)_n = (1 - a)(1 - a q) … (1 - a q^{n-1})` for `a` in the domain of `q`.
pub fn q_pochhammer(a: &Coeff, q: &Coeff, n: usize) -> Coeff {
    let dom = q.domain();
    let one = Coeff::one(&dom);
    let mut acc = one.clone();
    let mut term = a.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &term);
        term = &term * q;
    }
    acc
}

/// `[n, k]_q` as `(q;q)_n / ((q;q)_k (q;q)_{n-k})` by exact division in `Q[q]`.
pub fn qbinomial_ratio(n: usize, k: usize) -> Result<Coeff> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("q-binomial [{n}, {k}]")));
    }
    let dom = q_domain();
    let q = Coeff::variable(&dom, "q").unwrap();
    let qq = |m| q_pochhammer(&q, &q, m);
    qq(n).exact_div(&(&qq(k) * &qq(n - k)))
}

/// `[n, k]_q` extended to `n = k - 1` (the empty-product conventions of the
/// partial-theta numerators): `[-1, 0] = 1`, `[k-1, k] = 0` for `k ≥ 1`.
pub(crate) fn qbinomial_ext(rows: &[Vec<Vec<Integer>>], n: i64, k: usize) -> Vec<Integer> {
    if n < 0 {
        return if k == 0 { vec![Integer::from(1)] } else { Vec::new() };
    }
    let n = n as usize;
    if k > n {
        return Vec::new();
    }
    rows[n][k].clone()
}

pub(crate) fn qbinomial_table(n: usize) -> Vec<Vec<Vec<Integer>>> {
    qbinomial_rows(n, QPascal::First)
}

/// Largest `n` the permutation enumeration accepts.
pub const DUMONT_KREWERAS_LIMIT: usize = 8;

/// `P_n(a, b) = sum over permutations of [n] of a^{records} b^{exclusive antirecords}`
/// in `Q[a, b]`, by listing all `n!` permutations. A record is a strict
/// left-to-right maximum, an antirecord a strict right-to-left minimum, and
/// an exclusive antirecord an antirecord that is not a record.
pub fn dumont_kreweras_oracle(n: usize) -> Result<Coeff> {
    if n > DUMONT_KREWERAS_LIMIT {
        return Err(Error::SizeLimit { size: n, limit: DUMONT_KREWERAS_LIMIT });
    }
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for p in (0..n).permutations(n) {
        let mut rec = vec![false; n];
        let mut best = None;
        for (i, &v) in p.iter().enumerate() {
            if best.is_none_or(|b| v > b) {
                rec[i] = true;
                best = Some(v);
            }
        }
        let mut low = None;
        let mut earec = 0;
        for (i, &v) in p.iter().enumerate().rev() {
            if low.is_none_or(|l| v < l) {
                low = Some(v);
                if !rec[i] {
                    earec += 1;
                }
            }
        }
        let r = rec.iter().filter(|&&x| x).count() as u32;
        *counts.entry((r, earec)).or_default() += 1;
    }
    let dom = Domain::polynomial(&["a", "b"]).expect("valid names");
    let a = Coeff::variable(&dom, "a").unwrap();
    let b = Coeff::variable(&dom, "b").unwrap();
    let mut total = Coeff::zero(&dom);
    for ((r, e), c) in counts {
        let m = &a.pow(r) * &b.pow(e);
        total = &total + &m.rational_scale(&Rational::from(c));
    }
    Ok(total)
}
