use crate::coeffs::Coeff;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub k: usize,
    pub n: usize,
    /// `[t^n] (g_k - g_{k-1})`
    pub lhs: Coeff,
    /// `[t^n] (Delta_{k+1} g_k + A_{k+1} g_{k+1})`
    pub rhs: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerGaussReport {
    /// Number of recurrence instances checked (`k = 0..levels`).
    pub levels: usize,
    pub order: usize,
    pub first_failure: Option<Mismatch>,
}

impl EulerGaussReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `g_k - g_{k-1} = Delta_{k+1} g_k + A_{k+1} g_{k+1}` through `t^order`
/// for `0 ≤ k ≤ K-1`.
///
/// `g` lists `g_{-1}, g_0, …, g_K`; `deltas` and `a_terms` list
/// `Delta_1, …` and `A_1, …` (at least `K` of each). All `g_k` need constant
/// term 1, all `Delta_k` and `A_k` constant term 0. When the check passes,
/// `g_0 / g_{-1}` agrees through `t^order` with the continued fraction
/// `1 / (1 - Delta_1 - A_1 / (1 - Delta_2 - A_2 / …))` down to level `K`.
pub fn euler_gauss_verify(
    g: &[TruncatedSeries],
    deltas: &[TruncatedSeries],
    a_terms: &[TruncatedSeries],
    order: usize,
) -> Result<EulerGaussReport> {
    if g.len() < 2 {
        return Err(Error::BadParams("need at least g_-1 and g_0".into()));
    }
    let levels = g.len() - 2;
    if deltas.len() < levels || a_terms.len() < levels {
        return Err(Error::BadParams(format!("need {levels} Delta and A series")));
    }
    for (i, s) in g.iter().enumerate() {
        if !s.coeffs()[0].is_one() {
            return Err(Error::BadConstantTerm(format!("g_{}", i as isize - 1)));
        }
    }
    for (name, list) in [("Delta", deltas), ("A", a_terms)] {
        for (i, s) in list[..levels].iter().enumerate() {
            if !s.coeffs()[0].is_zero() {
                return Err(Error::BadConstantTerm(format!("{name}_{}", i + 1)));
            }
        }
    }
    for s in g.iter().chain(&deltas[..levels]).chain(&a_terms[..levels]) {
        if s.order() < order {
            return Err(Error::InsufficientDepth { requested: order, available: s.order() });
        }
    }
    let dom = g[0].domain();
    for k in 0..levels {
        let (gm, g0, gp) = (g[k].coeffs(), g[k + 1].coeffs(), g[k + 2].coeffs());
        let (d, a) = (deltas[k].coeffs(), a_terms[k].coeffs());
        for n in 0..=order {
            let lhs = &g0[n] - &gm[n];
            let mut rhs = Coeff::zero(dom);
            for j in 1..=n {
                rhs.add_mul_assign(&d[j], &g0[n - j]);
                rhs.add_mul_assign(&a[j], &gp[n - j]);
            }
            if lhs != rhs {
                return Ok(EulerGaussReport { levels, order, first_failure: Some(Mismatch { k, n, lhs, rhs }) });
            }
        }
    }
    Ok(EulerGaussReport { levels, order, first_failure: None })
}
