//! Exact coefficient domains: Q, Q(x) and Q[x1, …, xn].

mod parse;
mod poly;
mod ratfunc;
mod zpoly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use rug::{Integer, Rational};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    /// The field Q.
    Rational,
    /// The field Q(x) of univariate rational functions.
    RationalFunction(Arc<str>),
    /// Q[x1, …, xn], with monomials ordered lexicographically in this
    /// variable order.
    Polynomial(Arc<[String]>),
}

fn valid_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Domain {
    pub fn rational_function(var: &str) -> Result<Self> {
        if !valid_ident(var) {
            return Err(Error::BadParams(format!("invalid variable name `{var}`")));
        }
        Ok(Domain::RationalFunction(Arc::from(var)))
    }

    pub fn polynomial<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::BadParams("a polynomial ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            let v = v.as_ref();
            if !valid_ident(v) {
                return Err(Error::BadParams(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v) {
                return Err(Error::BadParams(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Domain::Polynomial(vars.iter().map(|v| v.as_ref().to_string()).collect()))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Polynomial(_))
    }

    pub fn variables(&self) -> Vec<&str> {
        match self {
            Domain::Rational => vec![],
            Domain::RationalFunction(v) => vec![v],
            Domain::Polynomial(vs) => vs.iter().map(|s| s.as_str()).collect(),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "QQ"),
            Domain::RationalFunction(v) => write!(f, "QQ({v})"),
            Domain::Polynomial(vs) => write!(f, "QQ[{}]", vs.join(",")),
        }
    }
}

/// An exact element of a [`Domain`], always in canonical form, so derived
/// equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(Rational),
    RationalFunction(RatFunc),
    Polynomial(Poly),
}

impl Coeff {
    pub fn domain(&self) -> Domain {
        match self {
            Coeff::Rational(_) => Domain::Rational,
            Coeff::RationalFunction(r) => Domain::RationalFunction(r.var_name().clone()),
            Coeff::Polynomial(p) => Domain::Polynomial(p.vars().clone()),
        }
    }

    pub fn in_domain(&self, d: &Domain) -> bool {
        match (self, d) {
            (Coeff::Rational(_), Domain::Rational) => true,
            (Coeff::RationalFunction(r), Domain::RationalFunction(v)) => r.var_name() == v,
            (Coeff::Polynomial(p), Domain::Polynomial(vs)) => Arc::ptr_eq(p.vars(), vs) || p.vars() == vs,
            _ => false,
        }
    }

    fn same_domain(&self, o: &Coeff) -> bool {
        match (self, o) {
            (Coeff::Rational(_), Coeff::Rational(_)) => true,
            (Coeff::RationalFunction(a), Coeff::RationalFunction(b)) => a.var_name() == b.var_name(),
            (Coeff::Polynomial(a), Coeff::Polynomial(b)) => Arc::ptr_eq(a.vars(), b.vars()) || a.vars() == b.vars(),
            _ => false,
        }
    }

    fn check(&self, o: &Coeff) -> Result<()> {
        if self.same_domain(o) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain().to_string(), o.domain().to_string()))
        }
    }

    pub fn from_rational(d: &Domain, r: Rational) -> Coeff {
        match d {
            Domain::Rational => Coeff::Rational(r),
            Domain::RationalFunction(v) => Coeff::RationalFunction(RatFunc::from_rational(v.clone(), &r)),
            Domain::Polynomial(vs) => Coeff::Polynomial(Poly::constant(vs.clone(), r)),
        }
    }

    pub fn from_int(d: &Domain, n: i64) -> Coeff {
        Self::from_rational(d, Rational::from(n))
    }

    pub fn zero(d: &Domain) -> Coeff {
        Self::from_int(d, 0)
    }

    pub fn one(d: &Domain) -> Coeff {
        Self::from_int(d, 1)
    }

    /// The generator named `name`.
    pub fn variable(d: &Domain, name: &str) -> Result<Coeff> {
        match d {
            Domain::RationalFunction(v) if &**v == name => {
                Ok(Coeff::RationalFunction(RatFunc::monomial(v.clone(), &Rational::from(1), 1)))
            }
            Domain::Polynomial(vs) => match vs.iter().position(|v| v == name) {
                Some(i) => {
                    let mut m = vec![0; vs.len()];
                    m[i] = 1;
                    Ok(Coeff::Polynomial(Poly::monomial(vs.clone(), Rational::from(1), m)))
                }
                None => Err(Error::Parse(format!("unknown variable `{name}` in {d}"))),
            },
            _ => Err(Error::Parse(format!("unknown variable `{name}` in {d}"))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.cmp0() == Ordering::Equal,
            Coeff::RationalFunction(r) => r.is_zero(),
            Coeff::Polynomial(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => *r == 1,
            Coeff::RationalFunction(r) => r.is_one(),
            Coeff::Polynomial(p) => p.is_one(),
        }
    }

    /// The value as a rational number when it is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Coeff::Rational(r) => Some(r.clone()),
            Coeff::RationalFunction(r) => r.as_constant(),
            Coeff::Polynomial(p) => p.as_constant(),
        }
    }

    pub fn checked_add(&self, o: &Coeff) -> Result<Coeff> {
        self.check(o)?;
        Ok(match (self, o) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational::from(a + b)),
            (Coeff::RationalFunction(a), Coeff::RationalFunction(b)) => Coeff::RationalFunction(a.add(b)),
            (Coeff::Polynomial(a), Coeff::Polynomial(b)) => Coeff::Polynomial(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, o: &Coeff) -> Result<Coeff> {
        self.check(o)?;
        Ok(match (self, o) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational::from(a - b)),
            (Coeff::RationalFunction(a), Coeff::RationalFunction(b)) => Coeff::RationalFunction(a.sub(b)),
            (Coeff::Polynomial(a), Coeff::Polynomial(b)) => Coeff::Polynomial(a.sub(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, o: &Coeff) -> Result<Coeff> {
        self.check(o)?;
        Ok(match (self, o) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational::from(a * b)),
            (Coeff::RationalFunction(a), Coeff::RationalFunction(b)) => Coeff::RationalFunction(a.mul(b)),
            (Coeff::Polynomial(a), Coeff::Polynomial(b)) => Coeff::Polynomial(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(Rational::from(-a)),
            Coeff::RationalFunction(a) => Coeff::RationalFunction(a.neg()),
            Coeff::Polynomial(a) => Coeff::Polynomial(a.neg()),
        }
    }

    /// `self / o`: the field quotient, or in a polynomial ring the exact
    /// quotient when it exists.
    pub fn exact_div(&self, o: &Coeff) -> Result<Coeff> {
        self.check(o)?;
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, o) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(Rational::from(a / b)),
            (Coeff::RationalFunction(a), Coeff::RationalFunction(b)) => {
                Coeff::RationalFunction(a.mul(&b.inv().unwrap()))
            }
            (Coeff::Polynomial(a), Coeff::Polynomial(b)) => match a.div_exact(b) {
                Some(q) => Coeff::Polynomial(q),
                None => {
                    return Err(Error::NonExactDivision { dividend: self.to_string(), divisor: o.to_string() })
                }
            },
            _ => unreachable!(),
        })
    }

    /// `self += a * b`, in place where the representation allows it.
    pub(crate) fn add_mul_assign(&mut self, a: &Coeff, b: &Coeff) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, a, b) {
            (Coeff::Rational(acc), Coeff::Rational(x), Coeff::Rational(y)) => *acc += Rational::from(x * y),
            _ => *self = &*self + &(a * b),
        }
    }

    /// `self -= a * b`, in place where the representation allows it.
    pub(crate) fn sub_mul_assign(&mut self, a: &Coeff, b: &Coeff) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, a, b) {
            (Coeff::Rational(acc), Coeff::Rational(x), Coeff::Rational(y)) => *acc -= Rational::from(x * y),
            _ => *self = &*self - &(a * b),
        }
    }

    /// Multiplicative inverse, when it exists in the domain.
    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Coeff::Rational(a) => Ok(Coeff::Rational(Rational::from(a.recip_ref()))),
            Coeff::RationalFunction(a) => Ok(Coeff::RationalFunction(a.inv().unwrap())),
            Coeff::Polynomial(p) => match p.as_constant() {
                Some(c) => Ok(Coeff::Polynomial(Poly::constant(p.vars().clone(), c.recip()))),
                None => Err(Error::NonExactDivision { dividend: "1".into(), divisor: self.to_string() }),
            },
        }
    }

    pub fn rational_scale(&self, r: &Rational) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(Rational::from(a * r)),
            Coeff::RationalFunction(a) => Coeff::RationalFunction(a.scale(r)),
            Coeff::Polynomial(a) => Coeff::Polynomial(a.scale(r)),
        }
    }

    pub fn pow(&self, e: u32) -> Coeff {
        let mut acc = Coeff::one(&self.domain());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sign of a rational constant; `None` for non-constant values.
    pub fn sign(&self) -> Option<Ordering> {
        self.as_rational().map(|r| r.cmp0())
    }

    /// Size measure: largest bit length among the integers stored.
    pub fn bit_size(&self) -> u32 {
        match self {
            Coeff::Rational(r) => r.numer().significant_bits().max(r.denom().significant_bits()),
            Coeff::RationalFunction(r) => r.max_coeff_bits(),
            Coeff::Polynomial(p) => p.max_coeff_bits(),
        }
    }

    /// Size measure: total degree (the larger of numerator and denominator
    /// degree for rational functions, 0 for rationals).
    pub fn degree(&self) -> u32 {
        match self {
            Coeff::Rational(_) => 0,
            Coeff::RationalFunction(r) => {
                let (a, b) = r.degrees();
                a.max(b) as u32
            }
            Coeff::Polynomial(p) => p.total_degree(),
        }
    }

    /// Parses the text encoding (see [`fmt::Display`]). Accepts general
    /// expressions with `+ - * / ^` and parentheses; `/` is exact division.
    pub fn parse(d: &Domain, s: &str) -> Result<Coeff> {
        parse::parse(d, s)
    }
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.cmp0() == Ordering::Less;
        let abs = Rational::from(c.abs_ref());
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let constant = m.iter().all(|&e| e == 0);
        let mut first = true;
        if abs != 1 || constant {
            write!(f, "{abs}")?;
            first = false;
        }
        for (v, &e) in p.vars().iter().zip(m) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
    }
    Ok(())
}

struct PolyDisplay<'a>(&'a Poly);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self.0, f)
    }
}

/// Rationals print as `p/q` or `n`; polynomials as `3/2*x^2*y - x + 1`
/// (terms in decreasing lexicographic order); rational functions as
/// `(num)/(den)` with monic denominator, or as a plain polynomial when the
/// denominator is 1.
impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => write!(f, "{r}"),
            Coeff::Polynomial(p) => fmt_poly(p, f),
            Coeff::RationalFunction(r) => {
                let (n, d) = r.to_monic_parts();
                if d.is_one() {
                    fmt_poly(&n, f)
                } else {
                    write!(f, "({})/({})", PolyDisplay(&n), PolyDisplay(&d))
                }
            }
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        self.checked_add(o).expect("coefficient domain mismatch")
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        self.checked_sub(o).expect("coefficient domain mismatch")
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        self.checked_mul(o).expect("coefficient domain mismatch")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(vars: &[&str], s: &str) -> Coeff {
        Coeff::parse(&Domain::polynomial(vars).unwrap(), s).unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        let d = Domain::Rational;
        let a = Coeff::parse(&d, "1/2").unwrap();
        let b = Coeff::parse(&d, "1/3").unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
    }

    #[test]
    fn polynomial_identities() {
        let p = &poly(&["a"], "a+1") * &poly(&["a"], "a-1");
        assert_eq!(p.to_string(), "a^2 - 1");
        let x = poly(&["x"], "x");
        assert!((&x + &-&x).is_zero());
        assert_eq!(p.exact_div(&poly(&["a"], "a-1")).unwrap(), poly(&["a"], "a+1"));
        let e = poly(&["a"], "a^2+1").exact_div(&poly(&["a"], "a-1")).unwrap_err();
        assert_eq!(e.kind(), "NonExactDivision");
    }

    #[test]
    fn field_division_in_rational_functions() {
        let d = Domain::rational_function("q").unwrap();
        let a = Coeff::parse(&d, "q^3-q").unwrap();
        let q = Coeff::parse(&d, "q").unwrap();
        assert_eq!(a.exact_div(&q).unwrap().to_string(), "q^2 - 1");
        let r = Coeff::parse(&d, "(q+1)/(q-1)").unwrap();
        assert_eq!(r.rational_scale(&Rational::from(-1)).to_string(), "(-q - 1)/(q - 1)");
        let h = Coeff::parse(&d, "(2*q+2)/(4*q^2-4)").unwrap();
        assert_eq!(h.to_string(), "(1/2)/(q - 1)");
    }

    #[test]
    fn scaling() {
        let x2 = poly(&["x"], "x^2");
        assert_eq!(x2.rational_scale(&Rational::from((1, 2))).to_string(), "1/2*x^2");
        let z = Coeff::zero(&Domain::Rational);
        assert!(z.rational_scale(&Rational::from((7, 3))).is_zero());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Coeff::from_int(&Domain::Rational, 1);
        let b = poly(&["x"], "x");
        assert_eq!(a.checked_add(&b).unwrap_err().kind(), "DomainMismatch");
        assert_eq!(b.checked_mul(&poly(&["y"], "y")).unwrap_err().kind(), "DomainMismatch");
    }
}
