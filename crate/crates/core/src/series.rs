//! Truncated formal power series `c_0 + c_1 t + … + c_N t^N + O(t^{N+1})`.

use std::fmt;

use crate::coeffs::{Coeff, Domain, Rational};
use crate::error::{Error, Result};

/// Coefficients `c_0..=c_N` over one domain; the series is known exactly
/// through `t^N` and unknown beyond.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    domain: Domain,
    coeffs: Vec<Coeff>,
}

impl TruncatedSeries {
    pub fn new(domain: Domain, coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadParams("a series needs at least the constant coefficient".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.in_domain(&domain)) {
            return Err(Error::DomainMismatch(domain.to_string(), c.domain().to_string()));
        }
        Ok(TruncatedSeries { domain, coeffs })
    }

    pub(crate) fn from_vec_unchecked(domain: Domain, coeffs: Vec<Coeff>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries { domain, coeffs }
    }

    pub fn from_rationals<I, R>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: Into<Rational>,
    {
        let coeffs = values.into_iter().map(|v| Coeff::Rational(v.into())).collect();
        Self::new(Domain::Rational, coeffs)
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::from_rationals(values.iter().copied())
    }

    pub fn constant(domain: &Domain, c: Coeff, order: usize) -> Self {
        let mut v = vec![Coeff::zero(domain); order + 1];
        v[0] = c;
        TruncatedSeries { domain: domain.clone(), coeffs: v }
    }

    pub fn one(domain: &Domain, order: usize) -> Self {
        Self::constant(domain, Coeff::one(domain), order)
    }

    pub fn zero(domain: &Domain, order: usize) -> Self {
        TruncatedSeries { domain: domain.clone(), coeffs: vec![Coeff::zero(domain); order + 1] }
    }

    /// `c t^e` known through `t^order`.
    pub fn monomial(domain: &Domain, c: Coeff, e: usize, order: usize) -> Self {
        let mut s = Self::zero(domain, order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&Coeff> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    /// Forgets everything beyond `t^order`.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries { domain: self.domain.clone(), coeffs: self.coeffs[..=n].to_vec() }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.domain == o.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain.to_string(), o.domain.to_string()))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self::from_vec_unchecked(self.domain.clone(), coeffs))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self::from_vec_unchecked(self.domain.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::from_vec_unchecked(self.domain.clone(), self.coeffs.iter().map(Coeff::neg).collect())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.order().min(o.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = Coeff::zero(&self.domain);
                for i in 0..=k {
                    acc.add_mul_assign(&self.coeffs[i], &o.coeffs[k - i]);
                }
                acc
            })
            .collect();
        Ok(Self::from_vec_unchecked(self.domain.clone(), coeffs))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Coeff) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.checked_mul(c)).collect::<Result<_>>()?;
        Ok(Self::from_vec_unchecked(self.domain.clone(), coeffs))
    }

    pub fn rational_scale(&self, r: &Rational) -> Self {
        Self::from_vec_unchecked(self.domain.clone(), self.coeffs.iter().map(|a| a.rational_scale(r)).collect())
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar(&self, c: &Coeff) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.exact_div(c)).collect::<Result<_>>()?;
        Ok(Self::from_vec_unchecked(self.domain.clone(), coeffs))
    }

    /// `1/f` through `order(f)`. Needs an invertible constant term; in a
    /// polynomial ring the constant term must be 1.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv = match self.domain {
            Domain::Polynomial(_) if !c0.is_one() => return Err(Error::NonUnitConstantTerm(c0.to_string())),
            _ if c0.is_zero() => return Err(Error::NonUnitConstantTerm(c0.to_string())),
            _ => c0.inv()?,
        };
        let unit = inv.is_one();
        let mut g: Vec<Coeff> = Vec::with_capacity(self.coeffs.len());
        g.push(inv.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Coeff::zero(&self.domain);
            for k in 1..=n {
                acc.add_mul_assign(&self.coeffs[k], &g[n - k]);
            }
            let v = if unit { acc.neg() } else { (&acc * &inv).neg() };
            g.push(v);
        }
        Ok(Self::from_vec_unchecked(self.domain.clone(), g))
    }

    /// Drops `t^p`: needs `c_0 = … = c_{p-1} = 0` and `p ≤ order`.
    pub fn shift_down(&self, p: usize) -> Result<Self> {
        if p > self.order() {
            return Err(Error::OrderUnderflow { shift: p, order: self.order() });
        }
        if let Some(i) = self.coeffs[..p].iter().position(|c| !c.is_zero()) {
            return Err(Error::NonzeroLowCoefficients { index: i });
        }
        Ok(Self::from_vec_unchecked(self.domain.clone(), self.coeffs[p..].to_vec()))
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log1(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermViolation(format!("log needs c_0 = 1, got {}", self.coeffs[0])));
        }
        let f = &self.coeffs;
        let mut g: Vec<Coeff> = vec![Coeff::zero(&self.domain)];
        for n in 1..f.len() {
            // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
            let mut acc = Coeff::zero(&self.domain);
            for k in 1..n {
                if !g[k].is_zero() && !f[n - k].is_zero() {
                    acc = &acc + &(&g[k] * &f[n - k]).rational_scale(&Rational::from(k));
                }
            }
            let v = &f[n] - &acc.rational_scale(&Rational::from((1, n)));
            g.push(v);
        }
        Ok(Self::from_vec_unchecked(self.domain.clone(), g))
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp0(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermViolation(format!("exp needs c_0 = 0, got {}", self.coeffs[0])));
        }
        let g = &self.coeffs;
        let mut h: Vec<Coeff> = vec![Coeff::one(&self.domain)];
        for n in 1..g.len() {
            // n h_n = sum_{k=1}^{n} k g_k h_{n-k}
            let mut acc = Coeff::zero(&self.domain);
            for k in 1..=n {
                if !g[k].is_zero() && !h[n - k].is_zero() {
                    acc = &acc + &(&g[k] * &h[n - k]).rational_scale(&Rational::from(k));
                }
            }
            h.push(acc.rational_scale(&Rational::from((1, n))));
        }
        Ok(Self::from_vec_unchecked(self.domain.clone(), h))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
