//! Continued-fraction expansion of truncated series.
//!
//! Two algorithms compute the same expansion: [`expand_primitive`] iterates
//! `f_k = alpha_k^{-1} t^{-p_k} (1 - 1/f_{k-1} - Delta_k)` with one series
//! reciprocal per level, [`expand_refined`] works on the numerators `g_k` of
//! `f_k = g_k / g_{k-1}` and needs only linear coefficient operations when
//! every `M_k = 0`.

mod convert;
mod hankel;
mod primitive;
mod refined;
mod scan;
mod verify;

pub use convert::{as_jfraction, as_sfraction, cf_to_series, contract_s_to_j};
pub use hankel::{jfraction_from_hankel, HankelJFraction};
pub use primitive::expand_primitive;
pub use refined::{expand_refined, RefinedExpansion};
pub use scan::{stieltjes_positivity_scan, ScanOutcome};
pub use verify::{euler_gauss_verify, EulerGaussReport, Mismatch};

use crate::coeffs::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// The degree bounds `M_k` of the `Delta_k` polynomials and, optionally, the
/// exponents `p_k` every level must have. Both lists are 1-indexed by level
/// and their last entry repeats forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionShape {
    m: Vec<usize>,
    strict_p: Option<Vec<usize>>,
}

impl ExpansionShape {
    /// `M = 0, 0, …` (C-fractions; regular ones are S-fractions).
    pub fn c_fraction() -> Self {
        ExpansionShape { m: vec![0], strict_p: None }
    }

    /// `M = 0, 0, …` with every `p_k = 1` enforced.
    pub fn s_fraction() -> Self {
        ExpansionShape { m: vec![0], strict_p: Some(vec![1]) }
    }

    /// `M = 1, 1, …` with every `p_k = 2` enforced.
    pub fn j_fraction() -> Self {
        ExpansionShape { m: vec![1], strict_p: Some(vec![2]) }
    }

    /// Arbitrary `M` list (last entry repeats); an empty list means `M = 0`.
    pub fn custom(m: Vec<usize>) -> Self {
        let m = if m.is_empty() { vec![0] } else { m };
        ExpansionShape { m, strict_p: None }
    }

    pub fn with_strict_p(mut self, p: Vec<usize>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::BadShape("strict p list is empty".into()));
        }
        self.strict_p = Some(p);
        let n = self.m.len().max(self.strict_p.as_ref().unwrap().len());
        for k in 1..=n {
            let req = self.required_p(k).unwrap();
            if req < self.m(k) + 1 {
                return Err(Error::BadShape(format!("p_{k} = {req} is below M_{k} + 1 = {}", self.m(k) + 1)));
            }
        }
        Ok(self)
    }

    /// `M_k` for level `k ≥ 1`.
    pub fn m(&self, k: usize) -> usize {
        self.m[(k.max(1) - 1).min(self.m.len() - 1)]
    }

    pub fn required_p(&self, k: usize) -> Option<usize> {
        self.strict_p.as_ref().map(|p| p[(k.max(1) - 1).min(p.len() - 1)])
    }

    pub fn m_list(&self) -> &[usize] {
        &self.m
    }

    pub fn strict_p_list(&self) -> Option<&[usize]> {
        self.strict_p.as_deref()
    }
}

/// One level `Delta_k(t) + alpha_k t^{p_k}` of the fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfTerm {
    /// Coefficients of `t, t², …, t^{M_k}` in `Delta_k`.
    pub delta: Vec<Coeff>,
    pub alpha: Coeff,
    pub p: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// `alpha_{depth+1}` vanishes as far as the data shows: the residual
    /// was zero through `t^{witnessed_through}` of the last numerator.
    Terminated { depth: usize, witnessed_through: usize },
    /// The data ran out before the next level could be determined;
    /// `remaining_budget` is the order left at the last level.
    Inconclusive { remaining_budget: usize },
}

/// `alpha0 / (1 - Delta_1 - alpha_1 t^{p_1} / (1 - Delta_2 - …))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFraction {
    pub domain: Domain,
    pub alpha0: Coeff,
    pub terms: Vec<CfTerm>,
    /// The determined coefficients of the `Delta` one level below the last
    /// term. Complete (length `M`) under `Terminated`, possibly shorter under
    /// `Inconclusive`.
    pub tail_delta: Vec<Coeff>,
    pub status: Status,
}

impl CFraction {
    pub fn depth(&self) -> usize {
        self.terms.len()
    }

    pub fn alphas(&self) -> Vec<&Coeff> {
        self.terms.iter().map(|t| &t.alpha).collect()
    }

    /// The order through which the fraction determines the series; `None`
    /// for a terminated (finite) fraction.
    pub fn determined_order(&self) -> Option<usize> {
        match self.status {
            Status::Terminated { .. } => None,
            Status::Inconclusive { remaining_budget } => {
                Some(self.terms.iter().map(|t| t.p).sum::<usize>() + remaining_budget)
            }
        }
    }
}

/// Result of processing one level.
pub(crate) enum Level {
    Term(CfTerm),
    Done { status: Status, tail_delta: Vec<Coeff> },
}

/// Decides level `k` from the residual `r`, indexed by exponent and known
/// through `t^budget`, whose coefficients of `t^1..t^M` are `delta`.
pub(crate) fn classify(
    shape: &ExpansionShape,
    k: usize,
    budget: usize,
    delta: Vec<Coeff>,
    residual: impl Fn(usize) -> Coeff,
) -> Result<(Level, Option<Vec<Coeff>>)> {
    let m = shape.m(k);
    if budget <= m {
        let status = Status::Inconclusive { remaining_budget: budget };
        return Ok((Level::Done { status, tail_delta: delta }, None));
    }
    let r: Vec<Coeff> = (m + 1..=budget).map(residual).collect();
    let Some(i) = r.iter().position(|c| !c.is_zero()) else {
        let status = Status::Terminated { depth: k - 1, witnessed_through: budget };
        return Ok((Level::Done { status, tail_delta: delta }, None));
    };
    let p = m + 1 + i;
    if let Some(req) = shape.required_p(k) {
        if req != p {
            return Err(Error::StrictShapeViolation { level: k, expected: req, found: p });
        }
    }
    let alpha = r[i].clone();
    let next = r[i..].iter().map(|c| c.exact_div(&alpha)).collect::<Result<Vec<_>>>()?;
    Ok((Level::Term(CfTerm { delta, alpha, p }), Some(next)))
}

/// The numerator series `g_{-1}, g_0, …, g_K` of an expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTable {
    rows: Vec<TruncatedSeries>,
}

impl GTable {
    pub(crate) fn new(rows: Vec<TruncatedSeries>) -> Self {
        GTable { rows }
    }

    /// Largest `k` with a stored row.
    pub fn max_k(&self) -> isize {
        self.rows.len() as isize - 2
    }

    /// `g_k` for `k ≥ -1`.
    pub fn row(&self, k: isize) -> Option<&TruncatedSeries> {
        usize::try_from(k + 1).ok().and_then(|i| self.rows.get(i))
    }

    /// `[t^n] g_k`, if within the row's order.
    pub fn get(&self, k: isize, n: usize) -> Option<&Coeff> {
        self.row(k).and_then(|r| r.coeff(n))
    }

    /// All rows, starting with `g_{-1}`.
    pub fn rows(&self) -> &[TruncatedSeries] {
        &self.rows
    }

    /// Rechecks `g_{k-1} - g_{k-2} - Delta_k g_{k-1} = alpha_k t^{p_k} g_k`
    /// coefficientwise for every stored level. Returns the first failing
    /// `(k, n)`.
    pub fn check_recurrence(&self, cf: &CFraction) -> Option<(usize, usize)> {
        for (i, term) in cf.terms.iter().enumerate() {
            let k = i + 1;
            let (g2, g1, g0) = (&self.rows[i], &self.rows[i + 1], self.rows.get(i + 2)?);
            if g0.coeffs()[0] != Coeff::one(&cf.domain) {
                return Some((k, 0));
            }
            for n in 0..=g1.order() {
                let mut lhs = &g1.coeffs()[n] - &g2.coeffs()[n];
                for (j, d) in term.delta.iter().enumerate() {
                    if j < n {
                        lhs.sub_mul_assign(d, &g1.coeffs()[n - j - 1]);
                    }
                }
                let rhs = if n >= term.p {
                    &term.alpha * &g0.coeffs()[n - term.p]
                } else {
                    Coeff::zero(&cf.domain)
                };
                if lhs != rhs {
                    return Some((k, n));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_tails_repeat() {
        let s = ExpansionShape::custom(vec![0, 2, 1]);
        assert_eq!((s.m(1), s.m(2), s.m(3), s.m(9)), (0, 2, 1, 1));
        assert!(ExpansionShape::custom(vec![1]).with_strict_p(vec![1]).is_err());
        assert!(ExpansionShape::custom(vec![0, 1]).with_strict_p(vec![1, 2]).is_ok());
        assert_eq!(ExpansionShape::j_fraction().required_p(5), Some(2));
    }
}
