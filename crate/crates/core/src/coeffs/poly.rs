//! Sparse multivariate polynomials over Q in lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use rug::Rational;

pub type Monomial = Vec<u32>;

/// Terms sorted by increasing exponent vector (lexicographic in the declared
/// variable order), zero coefficients never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: Vec<(Monomial, Rational)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Poly {
    pub(crate) fn zero(vars: Arc<[String]>) -> Self {
        Poly { vars, terms: Vec::new() }
    }

    pub(crate) fn constant(vars: Arc<[String]>, c: Rational) -> Self {
        let n = vars.len();
        Self::monomial(vars, c, vec![0; n])
    }

    pub(crate) fn monomial(vars: Arc<[String]>, c: Rational, m: Monomial) -> Self {
        debug_assert_eq!(m.len(), vars.len());
        if c.cmp0() == Ordering::Equal {
            return Self::zero(vars);
        }
        Poly { vars, terms: vec![(m, c)] }
    }

    /// Coefficients of 1, x, x², … in the first variable.
    pub(crate) fn from_univariate(vars: Arc<[String]>, coeffs: Vec<Rational>) -> Self {
        let n = vars.len();
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| c.cmp0() != Ordering::Equal)
            .map(|(e, c)| {
                let mut m = vec![0; n];
                m[0] = e as u32;
                (m, c)
            })
            .collect();
        Poly { vars, terms }
    }

    pub(crate) fn from_map(vars: Arc<[String]>, map: BTreeMap<Monomial, Rational>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| c.cmp0() != Ordering::Equal).collect();
        Poly { vars, terms }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    /// Terms in increasing lexicographic order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::new()),
            [(m, c)] if m.iter().all(|&e| e == 0) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.iter().all(|&e| e == 0) && *c == 1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn max_coeff_bits(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, c)| c.numer().significant_bits().max(c.denom().significant_bits()))
            .max()
            .unwrap_or(0)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        let sign = |c: &Rational| if negate { Rational::from(-c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        Rational::from(&a[i].1 - &b[j].1)
                    } else {
                        Rational::from(&a[i].1 + &b[j].1)
                    };
                    if c.cmp0() != Ordering::Equal {
                        terms.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(a[i..].iter().cloned());
        terms.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Poly { vars: self.vars.clone(), terms }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), Rational::from(-c))).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.cmp0() == Ordering::Equal {
            return Self::zero(self.vars.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), Rational::from(c * r))).collect(),
        }
    }

    fn mul_term(&self, m: &[u32], c: &Rational) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m2, c2)| (m2.iter().zip(m).map(|(a, b)| a + b).collect(), Rational::from(c2 * c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.vars.clone());
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let mut m = vec![0u32; self.vars.len()];
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                for (k, e) in m.iter_mut().enumerate() {
                    *e = m1[k] + m2[k];
                }
                let p = Rational::from(c1 * c2);
                match acc.get_mut(&m) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(m.clone(), p);
                    }
                }
            }
        }
        Self::from_map(self.vars.clone(), acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    /// `d` must be nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if let [(m, c)] = d.terms.as_slice() {
            if m.iter().all(|&e| e == 0) {
                return Some(self.scale(&Rational::from(c.recip_ref())));
            }
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m2, c2) in &self.terms {
                if !divides(m, m2) {
                    return None;
                }
                terms.push((m2.iter().zip(m).map(|(a, b)| a - b).collect(), Rational::from(c2 / c)));
            }
            return Some(Poly { vars: self.vars.clone(), terms });
        }
        let (dm, dc) = d.terms.last().unwrap();
        let mut r: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut q: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((rm, rc)) = r.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !divides(dm, &rm) {
                return None;
            }
            let qm: Monomial = rm.iter().zip(dm).map(|(a, b)| a - b).collect();
            let qc = Rational::from(&rc / dc);
            for (m2, c2) in &d.terms {
                let m: Monomial = m2.iter().zip(&qm).map(|(a, b)| a + b).collect();
                let p = Rational::from(c2 * &qc);
                match r.get_mut(&m) {
                    Some(v) => {
                        *v -= p;
                        if v.cmp0() == Ordering::Equal {
                            r.remove(&m);
                        }
                    }
                    None => {
                        r.insert(m, -p);
                    }
                }
            }
            q.insert(qm, qc);
        }
        Some(Self::from_map(self.vars.clone(), q))
    }

    /// Substitutes rational values for every variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.iter().zip(point) {
                for _ in 0..*e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Arc<[String]> {
        Arc::from(vec!["a".to_string(), "b".to_string()])
    }

    fn a() -> Poly {
        Poly::monomial(vars(), Rational::from(1), vec![1, 0])
    }

    fn one() -> Poly {
        Poly::constant(vars(), Rational::from(1))
    }

    #[test]
    fn factor_division() {
        let p = a().mul(&a()).sub(&one());
        assert_eq!(p.div_exact(&a().sub(&one())), Some(a().add(&one())));
        let p2 = a().mul(&a()).add(&one());
        assert_eq!(p2.div_exact(&a().sub(&one())), None);
    }
}
