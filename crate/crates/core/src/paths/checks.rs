use std::fmt;

use super::tables::entry;
use super::{enumerate_weighted_paths, jacobi_rogers_table, stieltjes_tables, PathMode, PathWeights};
use crate::coeffs::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::expand::{cf_to_series, expand_refined, CFraction, CfTerm, ExpansionShape, Status};
use crate::series::TruncatedSeries;

/// The finite fraction with the first `depth` levels of the weights:
/// an S-fraction for Stieltjes weights, otherwise the J-fraction with
/// `gamma_{k-1} t` and `beta_k t²` at level `k`. Stops early at a zero
/// partial numerator.
pub fn fraction_from_weights(w: &PathWeights, depth: usize) -> Result<CFraction> {
    let dom = w.domain().clone();
    let mut terms = Vec::new();
    let stieltjes = w.is_stieltjes();
    for k in 1..=depth {
        let (alpha, delta, p) = if stieltjes {
            (w.alpha(k)?, Vec::new(), 1)
        } else {
            (w.beta(k)?, vec![w.gamma(k - 1)?], 2)
        };
        if alpha.is_zero() {
            break;
        }
        terms.push(CfTerm { delta, alpha, p });
    }
    let tail_delta = if stieltjes { Vec::new() } else { vec![w.gamma(terms.len())?] };
    let depth = terms.len();
    Ok(CFraction {
        domain: dom.clone(),
        alpha0: Coeff::one(&dom),
        terms,
        tail_delta,
        status: Status::Terminated { depth, witnessed_through: 0 },
    })
}

/// Path length of the `n`-th moment: `n` Motzkin steps or `2n` Dyck steps.
fn steps(mode: PathMode, n: usize) -> usize {
    match mode {
        PathMode::Motzkin => n,
        PathMode::Dyck => 2 * n,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leg {
    Enumeration,
    Table,
    Fraction,
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Leg::Enumeration => "enumeration",
            Leg::Table => "table",
            Leg::Fraction => "fraction",
        })
    }
}

/// One leg disagreeing with the other two at moment `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegMismatch {
    pub n: usize,
    pub leg: Leg,
    /// The value the other legs agree on, or the enumeration when all differ.
    pub expected: Coeff,
    pub found: Coeff,
}

/// `[s^m]` of `g_{0→l}` by enumeration and by the product of level-shifted fractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMismatch {
    pub l: usize,
    pub m: usize,
    pub enumeration: Coeff,
    pub product: Coeff,
}

/// The moments `0..=N` computed three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlajoletLegs {
    pub mode: PathMode,
    /// Weighted paths from height 0 to 0.
    pub enumeration: Vec<Coeff>,
    /// Column 0 of the J table (S table for Dyck paths).
    pub table: Vec<Coeff>,
    /// Coefficients of the continued fraction.
    pub fraction: Vec<Coeff>,
}

impl FlajoletLegs {
    pub fn compute(w: &PathWeights, order: usize) -> Result<Self> {
        let mode = w.mode();
        if steps(mode, order) > mode.enumeration_limit() || order > 10 {
            return Err(Error::SizeLimit { size: order, limit: 10 });
        }
        let enumeration = (0..=order)
            .map(|n| enumerate_weighted_paths(w, steps(mode, n), 0, 0, mode))
            .collect::<Result<Vec<_>>>()?;
        let (table, depth) = match mode {
            PathMode::Motzkin => (jacobi_rogers_table(w, order)?, order / 2 + 1),
            PathMode::Dyck => (stieltjes_tables(w, order)?.0, order.max(1)),
        };
        let table = table.column(0);
        let fraction = cf_to_series(&fraction_from_weights(w, depth)?, order)?.into_coeffs();
        Ok(FlajoletLegs { mode, enumeration, table, fraction })
    }

    pub fn compare(&self) -> Vec<LegMismatch> {
        let mut out = Vec::new();
        for n in 0..self.enumeration.len() {
            let (e, t, f) = (&self.enumeration[n], &self.table[n], &self.fraction[n]);
            let odd = if e == t && t == f {
                continue;
            } else if t == f {
                vec![(Leg::Enumeration, t, e)]
            } else if e == f {
                vec![(Leg::Table, e, t)]
            } else if e == t {
                vec![(Leg::Fraction, e, f)]
            } else {
                vec![(Leg::Table, e, t), (Leg::Fraction, e, f)]
            };
            for (leg, expected, found) in odd {
                out.push(LegMismatch { n, leg, expected: expected.clone(), found: found.clone() });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlajoletReport {
    pub order: usize,
    pub mismatches: Vec<LegMismatch>,
    /// Largest `l` for which `g_{0→l} = f_0 a_0 f_1 … a_{l-1} f_l` was compared.
    pub product_levels: usize,
    pub product_mismatches: Vec<ProductMismatch>,
}

impl FlajoletReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.product_mismatches.is_empty()
    }
}

/// `f_k(s) = 1 / (1 - c_k s - a_k b_{k+1} s² f_{k+1}(s))` through `s^order`,
/// `s` counting steps.
fn level_fraction(w: &PathWeights, k: usize, order: usize) -> Result<TruncatedSeries> {
    let dom = w.domain();
    let mut den = vec![Coeff::zero(dom); order + 1];
    den[0] = Coeff::one(dom);
    if order >= 1 {
        den[1] = w.level(k)?.neg();
    }
    if order >= 2 {
        let ab = &w.rise(k)? * &w.fall(k + 1)?;
        let inner = level_fraction(w, k + 1, order - 2)?;
        for (j, c) in inner.coeffs().iter().enumerate() {
            den[j + 2].sub_mul_assign(&ab, c);
        }
    }
    TruncatedSeries::new(dom.clone(), den)?.reciprocal()
}

fn product_check(w: &PathWeights, order: usize, max_l: usize) -> Result<Vec<ProductMismatch>> {
    let dom = w.domain();
    let mode = w.mode();
    let mut out = Vec::new();
    for l in 0..=max_l {
        // f_0 (a_0 s) f_1 (a_1 s) … f_l
        let mut prod = level_fraction(w, 0, order)?;
        for k in 1..=l {
            let rise = TruncatedSeries::monomial(dom, w.rise(k - 1)?, 1, order);
            prod = prod.mul(&rise)?.mul(&level_fraction(w, k, order)?)?;
        }
        for m in 0..=order {
            let e = enumerate_weighted_paths(w, m, 0, l, mode)?;
            if e != prod.coeffs()[m] {
                out.push(ProductMismatch { l, m, enumeration: e, product: prod.coeffs()[m].clone() });
                break;
            }
        }
    }
    Ok(out)
}

/// Compares, for moments `0..=N` (`N ≤ 10`),
/// exhaustive path enumeration, the recurrence table and the continued
/// fraction; then checks `g_{0→l} = f_0 a_0 f_1 a_1 … f_l` for `l ≤ 3`
/// through the same path length.
pub fn flajolet_check(w: &PathWeights, order: usize) -> Result<FlajoletReport> {
    let legs = FlajoletLegs::compute(w, order)?;
    let len = steps(w.mode(), order).min(w.mode().enumeration_limit());
    let product_mismatches = product_check(w, len, 3)?;
    Ok(FlajoletReport { order, mismatches: legs.compare(), product_levels: 3, product_mismatches })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HankelForm {
    /// `H^(0)(a) = J D J^T`, `D = diag(1, beta_1, beta_1 beta_2, …)`.
    J,
    /// `H^(0)(a) = S D S^T`, `D = diag(1, alpha_1 alpha_2, …)`.
    S,
    /// `H^(1)(a) = S' D' S'^T`, `D' = diag(alpha_1, alpha_1 alpha_2 alpha_3, …)`.
    Sprime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCheck {
    pub form: HankelForm,
    /// Dimension of the leading block.
    pub block: usize,
    /// First `(i, j, hankel entry, product entry)` that differs.
    pub mismatch: Option<(usize, usize, Coeff, Coeff)>,
}

impl BlockCheck {
    pub fn describe(&self) -> String {
        let b = self.block;
        match self.form {
            HankelForm::J => format!(
                "H0 = J D J^T on the leading {b}x{b} block, D = diag(1, beta_1, beta_1 beta_2, ...) \
                 (Rogers' addition formula on the coefficients t^i u^j, i, j < {b})"
            ),
            HankelForm::S => {
                format!("H0 = S D S^T on the leading {b}x{b} block, D = diag(1, alpha_1 alpha_2, ...)")
            }
            HankelForm::Sprime => format!(
                "H1 = S' D' S'^T on the leading {b}x{b} block, D' = diag(alpha_1, alpha_1 alpha_2 alpha_3, ...)"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelReport {
    pub checks: Vec<BlockCheck>,
}

impl HankelReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatch.is_none())
    }
}

fn block_check(
    form: HankelForm,
    a: &[Coeff],
    shift: usize,
    t: &super::TriangularTable,
    d: &[Coeff],
    dom: &Domain,
) -> Result<BlockCheck> {
    let b = d.len();
    for i in 0..b {
        for j in 0..b {
            let mut v = Coeff::zero(dom);
            for (k, dk) in d.iter().enumerate().take(i.min(j) + 1) {
                v.add_mul_assign(&(&entry(t, i, k)? * dk), &entry(t, j, k)?);
            }
            if v != a[i + j + shift] {
                return Ok(BlockCheck { form, block: b, mismatch: Some((i, j, a[i + j + shift].clone(), v)) });
            }
        }
    }
    Ok(BlockCheck { form, block: b, mismatch: None })
}

/// Checks the `LDL^T` factorizations of the leading `(N+1)×(N+1)` Hankel
/// blocks of `a`: the J form for Jacobi or general weights (needs
/// `a_0..a_{2N}`), the S form and, when `a_{2N+1}` is present, the shifted
/// S' form for Stieltjes weights.
pub fn hankel_factorization_check(a: &[Coeff], w: &PathWeights, size: usize) -> Result<HankelReport> {
    if a.len() < 2 * size + 1 {
        return Err(Error::InsufficientDepth { requested: 2 * size, available: a.len().saturating_sub(1) });
    }
    let dom = w.domain();
    for c in a {
        if !c.in_domain(dom) {
            return Err(Error::DomainMismatch(dom.to_string(), c.domain().to_string()));
        }
    }
    let mut checks = Vec::new();
    if w.is_stieltjes() {
        let (s, sp) = stieltjes_tables(w, size)?;
        let mut d = vec![Coeff::one(dom)];
        for k in 1..=size {
            let f = &w.alpha(2 * k - 1)? * &w.alpha(2 * k)?;
            d.push(&d[k - 1] * &f);
        }
        checks.push(block_check(HankelForm::S, a, 0, &s, &d, dom)?);
        if a.len() >= 2 * size + 2 {
            let mut d1 = vec![w.alpha(1)?];
            for k in 1..=size {
                let f = &w.alpha(2 * k)? * &w.alpha(2 * k + 1)?;
                d1.push(&d1[k - 1] * &f);
            }
            checks.push(block_check(HankelForm::Sprime, a, 1, &sp, &d1, dom)?);
        }
    } else {
        let j = jacobi_rogers_table(w, size)?;
        let mut d = vec![Coeff::one(dom)];
        for k in 1..=size {
            d.push(&d[k - 1] * &w.beta(k)?);
        }
        checks.push(block_check(HankelForm::J, a, 0, &j, &d, dom)?);
    }
    Ok(HankelReport { checks })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Number of `g_{k,n}` entries compared.
    pub checked: usize,
    /// First `(k, n, g_{k,n}, table entry)` that differs.
    pub mismatch: Option<(isize, usize, Coeff, Coeff)>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Expands the series of the fraction built from `w` through `t^N` with the
/// linear algorithm (`g_{-1} = 1`) and compares the numerator table with the
/// triangular tables: `g_{2j,n} = S_{n+j,j}`, `g_{2j+1,n} = S'_{n+j,j}` for
/// Stieltjes weights, `g_{k,n} = J_{n+k,k}` otherwise.
pub fn g_table_correspondence_check(w: &PathWeights, size: usize) -> Result<CorrespondenceReport> {
    let stieltjes = w.is_stieltjes();
    let (depth, shape) = if stieltjes {
        (size.max(1), ExpansionShape::c_fraction())
    } else {
        (size / 2 + 1, ExpansionShape::j_fraction())
    };
    let f = cf_to_series(&fraction_from_weights(w, depth)?, size)?;
    let (_, g) = expand_refined(&f, &shape, None)?;
    let tables = if stieltjes {
        let (s, sp) = stieltjes_tables(w, size)?;
        (s, Some(sp))
    } else {
        (jacobi_rogers_table(w, size)?, None)
    };
    let mut checked = 0;
    for k in 0..=g.max_k() {
        let row = g.row(k).unwrap();
        for (n, v) in row.coeffs().iter().enumerate() {
            let ku = k as usize;
            let want = match &tables {
                (s, Some(sp)) => {
                    let j = ku / 2;
                    entry(if ku.is_multiple_of(2) { s } else { sp }, n + j, j)?
                }
                (jt, None) => entry(jt, n + ku, ku)?,
            };
            checked += 1;
            if *v != want {
                return Ok(CorrespondenceReport { checked, mismatch: Some((k, n, v.clone(), want)) });
            }
        }
    }
    Ok(CorrespondenceReport { checked, mismatch: None })
}
