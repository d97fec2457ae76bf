use super::primitive::{interrupted, leading_unit};
use super::{classify, CFraction, CfTerm, ExpansionShape, GTable, Level, Status};
use crate::coeffs::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Resumable state of the linear expansion algorithm.
///
/// `rows[0]` is `g_{-1}`, `rows[k + 1]` is `g_k`, with `f_k = g_k / g_{k-1}`
/// and `g_k = alpha_k^{-1} t^{-p_k} (g_{k-1} - g_{k-2} - Delta_k g_{k-1})`.
#[derive(Clone, Debug)]
pub struct RefinedExpansion {
    shape: ExpansionShape,
    domain: Domain,
    f: Vec<Coeff>,
    custom_g_minus1: bool,
    alpha0: Coeff,
    rows: Vec<Vec<Coeff>>,
    terms: Vec<CfTerm>,
    done: Option<(Status, Vec<Coeff>)>,
}

fn check_g_minus1(g: &TruncatedSeries, dom: &Domain) -> Result<()> {
    if g.domain() != dom {
        return Err(Error::DomainMismatch(dom.to_string(), g.domain().to_string()));
    }
    if !g.coeffs()[0].is_one() {
        return Err(Error::BadGMinus1);
    }
    Ok(())
}

impl RefinedExpansion {
    /// Sets up `g_{-1}` (default: the constant 1) and
    /// `g_0 = alpha_0^{-1} g_{-1} f`. The working order is the smaller of the
    /// two input orders.
    pub fn new(f: &TruncatedSeries, shape: &ExpansionShape, g_minus1: Option<&TruncatedSeries>) -> Result<Self> {
        let domain = f.domain().clone();
        if let Some(g) = g_minus1 {
            check_g_minus1(g, &domain)?;
        }
        let alpha0 = leading_unit(f)?;
        let order = g_minus1.map_or(f.order(), |g| g.order().min(f.order()));
        let gm1: Vec<Coeff> = match g_minus1 {
            Some(g) => g.coeffs()[..=order].to_vec(),
            None => TruncatedSeries::one(&domain, order).into_coeffs(),
        };
        let mut st = RefinedExpansion {
            shape: shape.clone(),
            domain,
            f: f.coeffs()[..=order].to_vec(),
            custom_g_minus1: g_minus1.is_some(),
            alpha0,
            rows: vec![gm1, Vec::new()],
            terms: Vec::new(),
            done: None,
        };
        st.fill_g0(0)?;
        Ok(st)
    }

    /// Appends the coefficients `from..` of `g_0` up to the current order.
    fn fill_g0(&mut self, from: usize) -> Result<()> {
        let n_max = self.f.len() - 1;
        let custom = self.custom_g_minus1;
        for n in from..=n_max {
            let v = if custom {
                let mut acc = Coeff::zero(&self.domain);
                for i in 0..=n {
                    acc.add_mul_assign(&self.rows[0][i], &self.f[n - i]);
                }
                acc
            } else {
                self.f[n].clone()
            };
            let v = if self.alpha0.is_one() { v } else { v.exact_div(&self.alpha0)? };
            self.rows[1].push(v);
        }
        Ok(())
    }

    /// `[t^n] (g_{k-1} - g_{k-2} - Delta_k g_{k-1})`, rows given by index.
    fn residual(prev: &[Coeff], prev2: &[Coeff], delta: &[Coeff], n: usize) -> Coeff {
        let mut r = &prev[n] - &prev2[n];
        for (j, d) in delta.iter().enumerate() {
            if j < n {
                r.sub_mul_assign(d, &prev[n - j - 1]);
            }
        }
        r
    }

    /// The coefficients of `t..t^L` in `1 - g_{k-2}/g_{k-1}`, from a single
    /// reciprocal of length `L + 1`.
    fn delta(dom: &Domain, prev: &[Coeff], prev2: &[Coeff], l: usize) -> Result<Vec<Coeff>> {
        if l == 0 {
            return Ok(Vec::new());
        }
        let head = TruncatedSeries::from_vec_unchecked(dom.clone(), prev[..=l].to_vec());
        let inv = head.reciprocal()?;
        let inv = inv.coeffs();
        Ok((1..=l)
            .map(|j| {
                let mut acc = Coeff::zero(dom);
                for i in 0..=j {
                    acc.add_mul_assign(&prev2[i], &inv[j - i]);
                }
                acc.neg()
            })
            .collect())
    }

    /// Determines the next level. Returns `false` once the expansion has
    /// terminated or run out of data.
    pub fn step(&mut self) -> Result<bool> {
        if self.done.is_some() {
            return Ok(false);
        }
        let k = self.terms.len() + 1;
        let res = (|| {
            let prev = &self.rows[k];
            let prev2 = &self.rows[k - 1];
            let budget = prev.len() - 1;
            let l = self.shape.m(k).min(budget);
            let delta = Self::delta(&self.domain, prev, prev2, l)?;
            let d = delta.clone();
            classify(&self.shape, k, budget, delta, |n| Self::residual(prev, prev2, &d, n))
        })();
        match res {
            Ok((Level::Term(term), Some(next))) => {
                self.terms.push(term);
                self.rows.push(next);
                Ok(true)
            }
            Ok((Level::Done { status, tail_delta }, _)) => {
                self.done = Some((status, tail_delta));
                Ok(false)
            }
            Ok((Level::Term(_), None)) => unreachable!(),
            Err(e) => Err(interrupted(e, k, self.fraction())),
        }
    }

    /// Steps until termination or exhaustion of the data.
    pub fn run(&mut self) -> Result<()> {
        while self.step()? {}
        Ok(())
    }

    pub fn terms(&self) -> &[CfTerm] {
        &self.terms
    }

    pub fn is_finished(&self) -> bool {
        self.done.is_some()
    }

    /// The fraction found so far. Before the run has finished, the status
    /// is `Inconclusive` with the order left at the current level.
    pub fn fraction(&self) -> CFraction {
        let (status, tail_delta) = match &self.done {
            Some((s, d)) => (*s, d.clone()),
            None => {
                let budget = self.rows[self.terms.len() + 1].len() - 1;
                (Status::Inconclusive { remaining_budget: budget }, Vec::new())
            }
        };
        CFraction {
            domain: self.domain.clone(),
            alpha0: self.alpha0.clone(),
            terms: self.terms.clone(),
            tail_delta,
            status,
        }
    }

    pub fn table(&self) -> GTable {
        GTable::new(
            self.rows
                .iter()
                .map(|r| TruncatedSeries::from_vec_unchecked(self.domain.clone(), r.clone()))
                .collect(),
        )
    }

    /// Continues with more coefficients of the same series. `f` must agree
    /// with the data seen so far; a custom `g_{-1}` must be supplied again,
    /// extended as well. Existing rows only gain new columns; afterwards the
    /// expansion resumes where it stopped (call [`run`](Self::run)).
    pub fn extend(&mut self, f: &TruncatedSeries, g_minus1: Option<&TruncatedSeries>) -> Result<()> {
        if f.domain() != &self.domain {
            return Err(Error::DomainMismatch(self.domain.to_string(), f.domain().to_string()));
        }
        let old = self.f.len() - 1;
        for (i, (a, b)) in self.f.iter().zip(f.coeffs()).enumerate() {
            if a != b {
                return Err(Error::InconsistentExtension { index: i });
            }
        }
        let mut order = f.order();
        match (self.custom_g_minus1, g_minus1) {
            (true, None) => {
                return Err(Error::BadParams("a custom g_-1 must be extended along with the series".into()))
            }
            (_, Some(g)) => {
                check_g_minus1(g, &self.domain)?;
                for (i, (a, b)) in self.rows[0].iter().zip(g.coeffs()).enumerate() {
                    if a != b {
                        return Err(Error::InconsistentExtension { index: i });
                    }
                }
                if !self.custom_g_minus1 && g.coeffs()[1..].iter().any(|c| !c.is_zero()) {
                    return Err(Error::BadParams("g_-1 was the constant 1 and cannot change".into()));
                }
                order = order.min(g.order());
            }
            (false, None) => {}
        }
        if order <= old {
            return Ok(());
        }
        self.f.extend_from_slice(&f.coeffs()[old + 1..=order]);
        match g_minus1 {
            Some(g) => self.rows[0].extend_from_slice(&g.coeffs()[old + 1..=order]),
            None => self.rows[0].resize(order + 1, Coeff::zero(&self.domain)),
        }
        self.fill_g0(old + 1)?;
        for (i, term) in self.terms.iter().enumerate() {
            let k = i + 1;
            let (head, tail) = self.rows.split_at_mut(k + 1);
            let (prev2, prev) = (&head[k - 1], &head[k]);
            let row = &mut tail[0];
            let budget = prev.len() - 1;
            for n in row.len()..=budget - term.p {
                let r = Self::residual(prev, prev2, &term.delta, n + term.p);
                row.push(r.exact_div(&term.alpha)?);
            }
        }
        self.done = None;
        Ok(())
    }
}

/// Runs the linear algorithm to completion and returns the fraction with
/// its numerator table `g_{-1}, …, g_K`.
pub fn expand_refined(
    f: &TruncatedSeries,
    shape: &ExpansionShape,
    g_minus1: Option<&TruncatedSeries>,
) -> Result<(CFraction, GTable)> {
    let mut st = RefinedExpansion::new(f, shape, g_minus1)?;
    st.run()?;
    Ok((st.fraction(), st.table()))
}
