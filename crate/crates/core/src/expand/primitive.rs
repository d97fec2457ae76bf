use super::{classify, CFraction, ExpansionShape, Level, Status};
use crate::coeffs::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Leading coefficient as the unit `alpha_0`; errors unless it is invertible.
pub(super) fn leading_unit(f: &TruncatedSeries) -> Result<Coeff> {
    let a0 = f.coeffs()[0].clone();
    let unit = match f.domain() {
        Domain::Polynomial(_) => a0.as_rational().is_some_and(|r| r != 0),
        _ => !a0.is_zero(),
    };
    if unit {
        Ok(a0)
    } else {
        Err(Error::NonUnitConstantTerm(a0.to_string()))
    }
}

/// Wraps a mid-expansion failure together with the levels already found.
pub(super) fn interrupted(cause: Error, level: usize, partial: CFraction) -> Error {
    match cause {
        e @ Error::StrictShapeViolation { .. } => e,
        e => Error::Interrupted { level, partial: Box::new(partial), cause: Box::new(e) },
    }
}

/// The expansion obtained by iterating
/// `f_k = alpha_k^{-1} t^{-p_k} (1 - 1/f_{k-1} - Delta_k)`, with `Delta_k`
/// the part of `1 - 1/f_{k-1}` of degree at most `M_k`.
///
/// Costs one series reciprocal per level, hence cubic in the order.
pub fn expand_primitive(f: &TruncatedSeries, shape: &ExpansionShape) -> Result<CFraction> {
    let dom = f.domain().clone();
    let alpha0 = leading_unit(f)?;
    let mut cf = CFraction {
        domain: dom.clone(),
        alpha0: alpha0.clone(),
        terms: Vec::new(),
        tail_delta: Vec::new(),
        status: Status::Inconclusive { remaining_budget: f.order() },
    };
    let mut fk = f.div_scalar(&alpha0)?;
    loop {
        let k = cf.terms.len() + 1;
        let budget = fk.order();
        cf.status = Status::Inconclusive { remaining_budget: budget };
        let step = fk.reciprocal().and_then(|inv| {
            // 1 - 1/f_{k-1}, whose constant term vanishes
            let h: Vec<Coeff> = inv.into_coeffs().into_iter().map(|c| c.neg()).collect();
            let delta = h[1..=shape.m(k).min(budget)].to_vec();
            classify(shape, k, budget, delta, |n| h[n].clone())
        });
        match step {
            Ok((Level::Term(term), Some(next))) => {
                cf.terms.push(term);
                fk = TruncatedSeries::from_vec_unchecked(dom.clone(), next);
            }
            Ok((Level::Done { status, tail_delta }, _)) => {
                cf.status = status;
                cf.tail_delta = tail_delta;
                return Ok(cf);
            }
            Ok((Level::Term(_), None)) => unreachable!(),
            Err(e) => return Err(interrupted(e, k, cf)),
        }
    }
}
