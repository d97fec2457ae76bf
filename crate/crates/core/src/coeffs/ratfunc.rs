//! Univariate rational functions over Q.

use std::cmp::Ordering;
use std::sync::Arc;

use rug::Rational;

use super::poly::Poly;
use super::zpoly::ZPoly;

/// `num / den` with `num, den` in Z[x], coprime over Q, joint integer
/// content 1 and positive leading coefficient in `den`. This is unique for
/// every element of Q(x).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    var: Arc<str>,
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    pub(crate) fn var_name(&self) -> &Arc<str> {
        &self.var
    }

    pub(crate) fn zero(var: Arc<str>) -> Self {
        RatFunc { var, num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub(crate) fn from_rational(var: Arc<str>, r: &Rational) -> Self {
        let (n, d) = r.clone().into_numer_denom();
        RatFunc { var, num: ZPoly::constant(n), den: ZPoly::constant(d) }
    }

    /// `c * x^e`
    pub(crate) fn monomial(var: Arc<str>, c: &Rational, e: usize) -> Self {
        let (n, d) = c.clone().into_numer_denom();
        RatFunc { var, num: ZPoly::monomial(n, e), den: ZPoly::constant(d) }
    }

    /// Builds from arbitrary integer polynomials; the denominator must be nonzero.
    pub(crate) fn from_parts(var: Arc<str>, num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero());
        let g = ZPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() || g.is_zero() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::normalized(var, num, den)
    }

    /// Fixes content and sign of an already coprime pair.
    fn normalized(var: Arc<str>, mut num: ZPoly, mut den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero(var);
        }
        let mut c = num.content();
        c.gcd_mut(&den.content());
        if den.lc().cmp0() == Ordering::Less {
            c = -c;
        }
        if c != 1 {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        RatFunc { var, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational constant, if it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::new()),
            (Some(0), Some(0)) => Some(Rational::from((self.num.lc().clone(), self.den.lc().clone()))),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc { var: self.var.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            return Self::from_parts(self.var.clone(), n, self.den.clone());
        }
        let g = ZPoly::gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return Self::normalized(self.var.clone(), n, self.den.mul(&o.den));
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let n = self.num.mul(&d1).add(&o.num.mul(&b1));
        let den = b1.mul(&o.den);
        let g2 = ZPoly::gcd(&n, &g);
        if g2.is_one() || n.is_zero() {
            Self::normalized(self.var.clone(), n, den)
        } else {
            Self::normalized(self.var.clone(), n.div_exact(&g2).unwrap(), den.div_exact(&g2).unwrap())
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.var.clone());
        }
        let cancel = |a: &ZPoly, b: &ZPoly| {
            let g = ZPoly::gcd(a, b);
            if g.is_one() {
                (a.clone(), b.clone())
            } else {
                (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        Self::normalized(self.var.clone(), a.mul(&c), b.mul(&d))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.var.clone(), self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.cmp0() == Ordering::Equal {
            return Self::zero(self.var.clone());
        }
        let n = self.num.scale(r.numer());
        let d = self.den.scale(r.denom());
        Self::normalized(self.var.clone(), n, d)
    }

    /// Numerator and denominator over Q with a monic denominator.
    pub fn to_monic_parts(&self) -> (Poly, Poly) {
        let vars: Arc<[String]> = Arc::from(vec![self.var.to_string()]);
        let lc = self.den.lc().clone();
        let conv = |p: &ZPoly| {
            Poly::from_univariate(
                vars.clone(),
                p.coeffs().iter().map(|c| Rational::from((c.clone(), lc.clone()))).collect(),
            )
        };
        (conv(&self.num), conv(&self.den))
    }

    /// Degrees of numerator and denominator (zero counts as degree 0).
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0))
    }

    pub fn max_coeff_bits(&self) -> u32 {
        self.num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .map(|c| c.significant_bits())
            .max()
            .unwrap_or(0)
    }
}
