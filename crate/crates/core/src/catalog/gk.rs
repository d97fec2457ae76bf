//! Closed forms of the numerators `g_k` for which
//! `g_k - g_{k-1} = alpha_{k+1} t g_{k+1}`, so that `g_0 / g_{-1}` is the
//! S-fraction with coefficients `alpha`.

use rug::Integer;

use super::combinat::{binomial, factorial, q_pochhammer, qbinomial_ext, qbinomial_table, rising, stirling2_rows};
use super::{resolve, Ctx, Default, Param};
use crate::coeffs::{Coeff, Domain, Rational};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

use std::collections::BTreeMap;

type GFn = Box<dyn Fn(isize, usize) -> Coeff + Send + Sync>;
type AFn = Box<dyn Fn(usize) -> Coeff + Send + Sync>;

/// `g_{k,n}` in closed form for `k ≥ -1`, with the partial numerators
/// `A_k = alpha_k t` and `Delta_k = 0`.
pub struct GkFamily {
    name: &'static str,
    domain: Domain,
    g: GFn,
    alpha: AFn,
}

/// `g_{-1..=K}`, `Delta_{1..=K}` and `A_{1..=K}` through `t^N`, ready for
/// [`euler_gauss_verify`](crate::expand::euler_gauss_verify).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkData {
    pub g: Vec<TruncatedSeries>,
    pub deltas: Vec<TruncatedSeries>,
    pub a_terms: Vec<TruncatedSeries>,
}

impl std::fmt::Debug for GkFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GkFamily").field("name", &self.name).field("domain", &self.domain).finish()
    }
}

impl GkFamily {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// `[t^n] g_k`, `k ≥ -1`.
    pub fn g(&self, k: isize, n: usize) -> Coeff {
        (self.g)(k, n)
    }

    /// `alpha_k`, `k ≥ 1`.
    pub fn alpha(&self, k: usize) -> Coeff {
        (self.alpha)(k)
    }

    pub fn delta_series(&self, _k: usize, order: usize) -> TruncatedSeries {
        TruncatedSeries::zero(&self.domain, order)
    }

    pub fn a_series(&self, k: usize, order: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(&self.domain, self.alpha(k), 1, order)
    }

    pub fn materialize(&self, levels: usize, order: usize) -> GkData {
        let g = (-1..=levels as isize)
            .map(|k| TruncatedSeries::new(self.domain.clone(), (0..=order).map(|n| self.g(k, n)).collect()).unwrap())
            .collect();
        GkData {
            g,
            deltas: (1..=levels).map(|k| self.delta_series(k, order)).collect(),
            a_terms: (1..=levels).map(|k| self.a_series(k, order)).collect(),
        }
    }
}

const GK_FAMILIES: &[(&str, &[(&str, Default)])] = &[
    ("factorial", &[]),
    ("rising_factorial", &[("a", Default::Symbolic)]),
    ("f20", &[("a", Default::Symbolic), ("b", Default::Symbolic)]),
    ("rr", &[("q", Default::AlwaysSymbolic)]),
    ("rr_a", &[("a", Default::Required), ("q", Default::AlwaysSymbolic)]),
    ("rr_a_first", &[("a", Default::Required), ("q", Default::AlwaysSymbolic)]),
    ("partial_theta", &[("q", Default::Symbolic)]),
    ("bell", &[("x", Default::Symbolic), ("y", Default::Symbolic)]),
];

/// Names accepted by [`gk_family`].
pub fn gk_family_names() -> Vec<&'static str> {
    GK_FAMILIES.iter().map(|f| f.0).collect()
}

/// The closed-form family `name` (a `_ratio` suffix is ignored, so series
/// names work too).
pub fn gk_family(name: &str, params: &BTreeMap<String, Param>) -> Result<GkFamily> {
    let base = name.trim_end_matches("_ratio");
    let (fname, defs) =
        GK_FAMILIES.iter().find(|f| f.0 == base).ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    let ctx = resolve(fname, defs, params)?;
    gk_family_ctx(fname, ctx)
}

/// `(j, odd)` with `k = 2j - 1` (odd) or `k = 2j` (even).
fn split(k: isize) -> (i64, bool) {
    if k.rem_euclid(2) == 1 {
        ((k as i64 + 1) / 2, true)
    } else {
        (k as i64 / 2, false)
    }
}

fn int(d: &Domain, n: &Integer) -> Coeff {
    Coeff::from_rational(d, Rational::from(n))
}

fn horner(q: &Coeff, c: &[Integer]) -> Coeff {
    let d = q.domain();
    c.iter().rev().fold(Coeff::zero(&d), |acc, x| &(&acc * q) + &int(&d, x))
}

/// `q^e` for `e ≥ 0`.
fn qpow(q: &Coeff, e: i64) -> Coeff {
    q.pow(u32::try_from(e).expect("nonnegative exponent"))
}

pub(crate) fn gk_family_ctx(name: &'static str, ctx: Ctx) -> Result<GkFamily> {
    let d = ctx.domain.clone();
    let (g, alpha): (GFn, AFn) = match name {
        "factorial" => {
            let d1 = d.clone();
            (
                Box::new(move |k, n| {
                    let (j, odd) = split(k);
                    let b = binomial(n as i64 + j, n);
                    let other = if odd { binomial(n as i64 + j - 1, n) } else { b.clone() };
                    int(&d, &(b * other * factorial(n)))
                }),
                Box::new(move |k| Coeff::from_int(&d1, k.div_ceil(2) as i64)),
            )
        }
        "rising_factorial" => {
            let a = ctx.get("a").clone();
            let a1 = a.clone();
            let d1 = d.clone();
            (
                Box::new(move |k, n| {
                    let (j, odd) = split(k);
                    let r = rising(&(&a + &Coeff::from_int(&d, j)), n);
                    let b = binomial(n as i64 + j - i64::from(odd), n);
                    &r * &int(&d, &b)
                }),
                Box::new(move |k| {
                    let j = k.div_ceil(2) as i64;
                    if k % 2 == 1 {
                        &a1 + &Coeff::from_int(&d1, j - 1)
                    } else {
                        Coeff::from_int(&d1, j)
                    }
                }),
            )
        }
        "f20" => {
            let (a, b) = (ctx.get("a").clone(), ctx.get("b").clone());
            let (a1, b1) = (a.clone(), b.clone());
            let d1 = d.clone();
            (
                Box::new(move |k, n| {
                    let (j, odd) = split(k);
                    let ra = rising(&(&a + &Coeff::from_int(&d, j)), n);
                    let rb = rising(&(&b + &Coeff::from_int(&d, j - i64::from(odd))), n);
                    (&ra * &rb).rational_scale(&Rational::from((1, factorial(n))))
                }),
                Box::new(move |k| {
                    let j = k.div_ceil(2) as i64;
                    let base = if k % 2 == 1 { &a1 } else { &b1 };
                    base + &Coeff::from_int(&d1, j - 1)
                }),
            )
        }
        "rr" | "rr_a" | "rr_a_first" => {
            let q = ctx.get("q").clone();
            let a = if name == "rr" {
                Coeff::zero(&d)
            } else {
                let a = ctx.get("a").clone();
                if a.is_one() {
                    return Err(Error::BadParams("a = 1 makes (a;q)_n vanish".into()));
                }
                a
            };
            let first = name == "rr_a_first";
            let (q1, a1) = (q.clone(), a.clone());
            let one = Coeff::one(&d);
            (
                Box::new(move |k, n| {
                    let k = k as i64;
                    let n64 = n as i64;
                    // (a q^s; q)_n in the denominator
                    let s = if first { k.max(0) } else { k + 1 };
                    let den = &q_pochhammer(&q, &q, n) * &q_pochhammer(&(&a * &qpow(&q, s)), &q, n);
                    qpow(&q, n64 * (n64 + k)).exact_div(&den).expect("nonzero q-Pochhammer product")
                }),
                Box::new(move |k| {
                    let k = k as i64;
                    let num = qpow(&q1, k - 1).neg();
                    let f = |e: i64| &one - &(&a1 * &qpow(&q1, e));
                    let den = if first && k == 1 {
                        f(0)
                    } else if first {
                        &f(k - 2) * &f(k - 1)
                    } else {
                        &f(k - 1) * &f(k)
                    };
                    num.exact_div(&den).expect("nonzero denominator")
                }),
            )
        }
        "partial_theta" => {
            let q = ctx.get("q").clone();
            let q1 = q.clone();
            let one = Coeff::one(&d);
            (
                Box::new(move |k, n| {
                    let (j, odd) = split(k);
                    let n64 = n as i64;
                    let top = n64 + j - i64::from(odd);
                    let table = qbinomial_table(top.max(0) as usize);
                    let qb = horner(&q, &qbinomial_ext(&table, top, n));
                    &qb * &qpow(&q, n64 * (n64 + 2 * j - 1) / 2)
                }),
                Box::new(move |k| {
                    let j = k.div_ceil(2) as i64;
                    if k % 2 == 1 {
                        qpow(&q1, 2 * j - 2)
                    } else {
                        &qpow(&q1, j - 1) * &(&qpow(&q1, j) - &one)
                    }
                }),
            )
        }
        "bell" => {
            let (x, y) = (ctx.get("x").clone(), ctx.get("y").clone());
            let (x1, y1) = (x.clone(), y.clone());
            let d1 = d.clone();
            (
                Box::new(move |k, n| {
                    let (j, odd) = split(k);
                    let ju = j as usize;
                    let st = stirling2_rows(n + ju);
                    let mut acc = Coeff::zero(&d);
                    for i in 0..=n {
                        let c = st[n + ju][i + ju].clone() * binomial(i as i64 + j - i64::from(odd), i);
                        let m = &x.pow(i as u32) * &y.pow((n - i) as u32);
                        acc = &acc + &(&int(&d, &c) * &m);
                    }
                    acc
                }),
                Box::new(move |k| {
                    if k % 2 == 1 {
                        x1.clone()
                    } else {
                        &Coeff::from_int(&d1, (k / 2) as i64) * &y1
                    }
                }),
            )
        }
        _ => return Err(Error::UnknownFamily(name.to_string())),
    };
    Ok(GkFamily { name, domain: ctx.domain, g, alpha })
}
