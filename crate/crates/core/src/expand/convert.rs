use super::CFraction;
use crate::coeffs::Coeff;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// `1 - delta_1 t - … - delta_M t^M` through `t^order`.
fn one_minus_delta(cf: &CFraction, delta: &[Coeff], order: usize) -> Vec<Coeff> {
    let dom = &cf.domain;
    let mut s = TruncatedSeries::one(dom, order).into_coeffs();
    for (j, d) in delta.iter().enumerate() {
        if j < order {
            s[j + 1] = d.neg();
        }
    }
    s
}

/// Evaluates the fraction as a power series through `t^order`, bottom-up.
///
/// An `Inconclusive` fraction only determines the series through
/// `sum p_k + remaining_budget`; asking for more is `InsufficientDepth`.
pub fn cf_to_series(cf: &CFraction, order: usize) -> Result<TruncatedSeries> {
    if let Some(avail) = cf.determined_order() {
        if order > avail {
            return Err(Error::InsufficientDepth { requested: order, available: avail });
        }
    }
    let dom = &cf.domain;
    // psum[k] = p_1 + … + p_k
    let mut psum = vec![0usize];
    for t in &cf.terms {
        psum.push(psum.last().unwrap().saturating_add(t.p));
    }
    let deepest = (0..psum.len()).rev().find(|&k| psum[k] <= order).unwrap();
    let inner = if deepest == cf.terms.len() { &cf.tail_delta } else { &cf.terms[deepest].delta };
    let base = one_minus_delta(cf, inner, order - psum[deepest]);
    let mut h = TruncatedSeries::from_vec_unchecked(dom.clone(), base).reciprocal()?;
    for k in (1..=deepest).rev() {
        let term = &cf.terms[k - 1];
        let ord = order - psum[k - 1];
        let mut s = one_minus_delta(cf, &term.delta, ord);
        for (n, c) in h.coeffs().iter().enumerate() {
            if n + term.p <= ord {
                s[n + term.p].sub_mul_assign(&term.alpha, c);
            }
        }
        h = TruncatedSeries::from_vec_unchecked(dom.clone(), s).reciprocal()?;
    }
    h.scale(&cf.alpha0)
}

/// The `alpha_k` of a regular C-fraction (every `M_k = 0`, `p_k = 1`).
pub fn as_sfraction(cf: &CFraction) -> Result<Vec<Coeff>> {
    for (i, t) in cf.terms.iter().enumerate() {
        if !t.delta.is_empty() || t.p != 1 {
            return Err(Error::ShapeMismatch(format!(
                "level {} has M = {} and p = {}, not an S-fraction level",
                i + 1,
                t.delta.len(),
                t.p
            )));
        }
    }
    if !cf.tail_delta.is_empty() {
        return Err(Error::ShapeMismatch("the last level carries a nonempty Delta".into()));
    }
    Ok(cf.terms.iter().map(|t| t.alpha.clone()).collect())
}

/// `(gamma, beta)` of a J-fraction: every level has `M_k = 1` and `p_k = 2`,
/// `gamma_k` is the linear coefficient of `Delta_{k+1}` and `beta_k = alpha_k`.
/// A determined `Delta` below the last level contributes one extra `gamma`.
pub fn as_jfraction(cf: &CFraction) -> Result<(Vec<Coeff>, Vec<Coeff>)> {
    for (i, t) in cf.terms.iter().enumerate() {
        if t.delta.len() != 1 || t.p != 2 {
            return Err(Error::ShapeMismatch(format!(
                "level {} has M = {} and p = {}, not a J-fraction level",
                i + 1,
                t.delta.len(),
                t.p
            )));
        }
    }
    if cf.tail_delta.len() > 1 {
        return Err(Error::ShapeMismatch("the last Delta has degree above 1".into()));
    }
    let mut gammas: Vec<Coeff> = cf.terms.iter().map(|t| t.delta[0].clone()).collect();
    gammas.extend(cf.tail_delta.iter().cloned());
    let betas = cf.terms.iter().map(|t| t.alpha.clone()).collect();
    Ok((gammas, betas))
}

/// Even contraction of an S-fraction: `gamma_0 = alpha_1`,
/// `gamma_n = alpha_{2n} + alpha_{2n+1}`, `beta_n = alpha_{2n-1} alpha_{2n}`,
/// for every index the given `alpha_1, …, alpha_m` determine.
pub fn contract_s_to_j(alphas: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let m = alphas.len();
    let a = |i: usize| &alphas[i - 1];
    let mut gammas = Vec::new();
    if m >= 1 {
        gammas.push(a(1).clone());
    }
    let mut n = 1;
    while 2 * n < m {
        gammas.push(a(2 * n) + a(2 * n + 1));
        n += 1;
    }
    let betas = (1..=m / 2).map(|n| a(2 * n - 1) * a(2 * n)).collect();
    (gammas, betas)
}
