use std::cmp::Ordering;

use super::{ExpansionShape, RefinedExpansion, Status};
use crate::coeffs::{Domain, Rational};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    /// `alpha_index` is the first negative coefficient.
    Negative { index: usize, alpha: Rational },
    /// All determined coefficients are nonnegative.
    NoneFound(Status),
}

/// Expands a rational moment sequence as a C-fraction and reports the first
/// negative `alpha_n`, stopping there. Any level with `p > 1` is an error
/// rather than being skipped.
pub fn stieltjes_positivity_scan(a: &TruncatedSeries) -> Result<ScanOutcome> {
    if a.domain() != &Domain::Rational {
        return Err(Error::BadParams("the scan needs rational coefficients".into()));
    }
    if a.coeffs()[0].sign() != Some(Ordering::Greater) {
        return Err(Error::BadConstantTerm("a_0 must be positive".into()));
    }
    let mut st = RefinedExpansion::new(a, &ExpansionShape::c_fraction(), None)?;
    while st.step()? {
        let level = st.terms().len();
        let term = &st.terms()[level - 1];
        if term.p != 1 {
            return Err(Error::PEncountered { level, p: term.p });
        }
        if term.alpha.sign() == Some(Ordering::Less) {
            return Ok(ScanOutcome::Negative { index: level, alpha: term.alpha.as_rational().unwrap() });
        }
    }
    Ok(ScanOutcome::NoneFound(st.fraction().status))
}
