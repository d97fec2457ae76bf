//! Dense univariate polynomials over the integers.
//!
//! Used as numerator and denominator storage for rational functions. The gcd
//! is the heuristic evaluate-and-interpolate method with a primitive
//! remainder sequence as a fallback.

use std::cmp::Ordering;

use rug::{Assign, Complete, Integer};

/// Coefficients in increasing degree, no trailing zeros. The zero polynomial
/// is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct ZPoly {
    c: Vec<Integer>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::from(1))
    }

    pub fn constant(v: Integer) -> Self {
        Self::from_coeffs(vec![v])
    }

    /// `x^e`
    pub fn monomial(v: Integer, e: usize) -> Self {
        let mut c = vec![Integer::new(); e + 1];
        c[e] = v;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<Integer>) -> Self {
        while c.last().is_some_and(|x| x.cmp0().is_eq()) {
            c.pop();
        }
        ZPoly { c }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> &Integer {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn neg(&self) -> Self {
        ZPoly { c: self.c.iter().map(|x| Integer::from(-x)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (x, y) in c.iter_mut().zip(&short.c) {
            *x += y;
        }
        Self::from_coeffs(c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = self.c.clone();
        c.resize(n, Integer::new());
        for (x, y) in c.iter_mut().zip(&o.c) {
            *x -= y;
        }
        Self::from_coeffs(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![Integer::new(); self.c.len() + o.c.len() - 1];
        let mut tmp = Integer::new();
        for (i, x) in self.c.iter().enumerate() {
            if x.cmp0().is_eq() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                tmp.assign(x * y);
                c[i + j] += &tmp;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, v: &Integer) -> Self {
        if v.cmp0().is_eq() {
            return Self::zero();
        }
        ZPoly { c: self.c.iter().map(|x| (x * v).complete()).collect() }
    }

    /// Divides every coefficient by `v`, which must divide all of them.
    pub fn div_exact_scalar(&self, v: &Integer) -> Self {
        ZPoly { c: self.c.iter().map(|x| x.div_exact_ref(v).complete()).collect() }
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for x in &self.c {
            g.gcd_mut(x);
            if g == 1 {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().cmp0() == Ordering::Less {
            g = -g;
        }
        if g == 1 {
            self.clone()
        } else {
            self.div_exact_scalar(&g)
        }
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.c.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// The quotient `self / d` if it lies in Z[x].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return None;
        }
        if dd == 0 {
            let v = &d.c[0];
            if self.c.iter().all(|x| x.is_divisible(v)) {
                return Some(self.div_exact_scalar(v));
            }
            return None;
        }
        let lc = d.lc();
        let mut r = self.c.clone();
        let qlen = r.len() - dd;
        let mut q = vec![Integer::new(); qlen];
        let mut tmp = Integer::new();
        for i in (0..qlen).rev() {
            let top = &r[i + dd];
            if top.cmp0().is_eq() {
                continue;
            }
            if !top.is_divisible(lc) {
                return None;
            }
            let qi = top.div_exact_ref(lc).complete();
            for (j, dj) in d.c.iter().enumerate() {
                tmp.assign(&qi * dj);
                r[i + j] -= &tmp;
            }
            q[i] = qi;
        }
        if r.iter().any(|x| !x.cmp0().is_eq()) {
            return None;
        }
        Some(Self::from_coeffs(q))
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &Self) -> Self {
        let dd = d.c.len() - 1;
        let lc = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.c.len() > dd {
            let shift = r.c.len() - 1 - dd;
            let t = ZPoly::monomial(r.lc().clone(), shift).mul(d);
            r = r.scale(lc).sub(&t);
        }
        r
    }

    /// Gcd in Z[x] (equivalently, up to units, in Q[x]): primitive with
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if a.c.len() == 1 || b.c.len() == 1 {
            return ZPoly::one();
        }
        let a = a.primitive();
        let b = b.primitive();
        if a == b {
            return a;
        }
        if let Some(h) = heuristic_gcd(&a, &b) {
            return h;
        }
        gcd_prs(a, b)
    }
}

fn gcd_prs(mut a: ZPoly, mut b: ZPoly) -> ZPoly {
    if a.c.len() < b.c.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.prem(&b).primitive();
        a = b;
        b = r;
    }
    if a.c.len() == 1 {
        ZPoly::one()
    } else {
        a.primitive()
    }
}

fn max_norm(p: &ZPoly) -> Integer {
    p.c.iter().map(|x| x.clone().abs()).max().unwrap_or_default()
}

/// Symmetric base-`x` digits of `h`, read as polynomial coefficients.
fn interpolate(mut h: Integer, x: &Integer) -> ZPoly {
    let half = x.clone() >> 1u32;
    let mut c = Vec::new();
    while !h.cmp0().is_eq() {
        let (_, mut g) = h.div_rem_euc_ref(x).complete();
        if g > half {
            g -= x;
        }
        h -= &g;
        h.div_exact_mut(x);
        c.push(g);
    }
    ZPoly::from_coeffs(c)
}

/// Evaluation/interpolation gcd of two primitive polynomials of positive
/// degree. `None` when all attempts fail.
fn heuristic_gcd(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let fnorm = max_norm(f);
    let gnorm = max_norm(g);
    let m = fnorm.clone().min(gnorm.clone());
    // Any point above twice the smaller coefficient bound certifies the
    // candidate once it divides both inputs.
    let mut x: Integer = m * 2u32 + 29u32;
    let lower: Integer = (fnorm / f.lc().clone().abs()).min(gnorm / g.lc().clone().abs()) * 2u32 + 2u32;
    if lower > x {
        x = lower;
    }
    for _ in 0..6 {
        let ff = f.eval(&x);
        let gg = g.eval(&x);
        if !ff.cmp0().is_eq() && !gg.cmp0().is_eq() {
            let h = ff.gcd_ref(&gg).complete();
            let cand = interpolate(h.clone(), &x).primitive();
            if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return Some(cand);
            }
            let cff = interpolate(ff.div_exact_ref(&h).complete(), &x);
            if !cff.is_zero() {
                if let Some(hh) = f.div_exact(&cff) {
                    if !hh.is_zero() && g.div_exact(&hh).is_some() {
                        return Some(hh.primitive());
                    }
                }
            }
            let cfg = interpolate(gg.div_exact_ref(&h).complete(), &x);
            if !cfg.is_zero() {
                if let Some(hh) = g.div_exact(&cfg) {
                    if !hh.is_zero() && f.div_exact(&hh).is_some() {
                        return Some(hh.primitive());
                    }
                }
            }
        }
        let s = x.clone().sqrt().sqrt();
        x = x * 73794u32 * s / 27011u32;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(v.iter().map(|&x| Integer::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]); // 1 + x
        let b = p(&[-1, 0, 1]); // x^2 - 1
        let c = p(&[3, 0, 0, 2]);
        assert_eq!(ZPoly::gcd(&a.mul(&c), &b.mul(&c)), a.mul(&c).primitive());
        assert_eq!(ZPoly::gcd(&p(&[2, 4]), &p(&[3, 6])), p(&[1, 2]));
        assert_eq!(ZPoly::gcd(&p(&[1, 0, 1]), &p(&[-1, 1])), ZPoly::one());
    }

    #[test]
    fn gcd_agrees_with_prs() {
        let mut s = 12345u64;
        let mut rnd = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % 11) as i64 - 5
        };
        for _ in 0..200 {
            let mut mk = |n: usize| loop {
                let q = p(&(0..n).map(|_| rnd()).collect::<Vec<_>>());
                if q.degree().unwrap_or(0) >= 1 {
                    break q;
                }
            };
            let (a, b, c) = (mk(4), mk(4), mk(3));
            let x = a.mul(&c);
            let y = b.mul(&c);
            let h = ZPoly::gcd(&x, &y);
            assert_eq!(h, gcd_prs(x.primitive(), y.primitive()));
            assert!(x.div_exact(&h).is_some() && y.div_exact(&h).is_some());
        }
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
    }
}
