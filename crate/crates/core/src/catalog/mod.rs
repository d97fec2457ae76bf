//! Named series families, their expected continued fractions, and the
//! closed-form `g_k` families that prove them by the Euler–Gauss method.

mod combinat;
mod gk;

pub use combinat::{
    binomial, dumont_kreweras_oracle, factorial, q_pochhammer, qbinomial, qbinomial_ratio, qbinomial_with, rising,
    stirling2_rows, QPascal, DUMONT_KREWERAS_LIMIT,
};
pub use gk::{gk_family, gk_family_names, GkData, GkFamily};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rug::{Complete, Integer};

use crate::coeffs::{Coeff, Domain, Rational};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// A family parameter: an exact value, or a fresh indeterminate of the
/// same name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Value(Rational),
    Symbolic,
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "sym" | "symbolic") {
            return Ok(Param::Symbolic);
        }
        s.parse::<Rational>().map(Param::Value).map_err(|_| Error::Parse(format!("bad parameter value `{s}`")))
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Value(r) => write!(f, "{r}"),
            Param::Symbolic => f.write_str("sym"),
        }
    }
}

/// A named family with parameters, expanded through `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub name: String,
    pub params: BTreeMap<String, Param>,
    pub order: usize,
}

impl SeriesSpec {
    pub fn new(name: &str, order: usize) -> Self {
        SeriesSpec { name: name.to_string(), params: BTreeMap::new(), order }
    }

    pub fn with(mut self, key: &str, value: Param) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    /// `with(key, Param::Value(value))` for a rational written as text.
    pub fn with_value(self, key: &str, value: &str) -> Result<Self> {
        let v = value.parse::<Param>()?;
        Ok(self.with(key, v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Default {
    Symbolic,
    Required,
    /// The parameter must be symbolic (`q` of the q-series over Q(q)).
    AlwaysSymbolic,
}

struct FamilyDef {
    name: &'static str,
    params: &'static [(&'static str, Default)],
    domain: &'static str,
    pattern: &'static str,
    attribution: &'static str,
}

const FAMILIES: &[FamilyDef] = &[
    FamilyDef {
        name: "factorial",
        params: &[],
        domain: "QQ",
        pattern: "a_n = n!; S-fraction alpha_{2j-1} = alpha_{2j} = j",
        attribution: "Euler",
    },
    FamilyDef {
        name: "rising_factorial",
        params: &[("a", Default::Symbolic)],
        domain: "QQ[a], or QQ for numeric a",
        pattern: "a_n = a(a+1)...(a+n-1); alpha_{2j-1} = a+j-1, alpha_{2j} = j",
        attribution: "Euler",
    },
    FamilyDef {
        name: "odd_double_factorial",
        params: &[],
        domain: "QQ",
        pattern: "a_n = (2n-1)!!; alpha_k = k",
        attribution: "Euler",
    },
    FamilyDef {
        name: "bell",
        params: &[("x", Default::Symbolic), ("y", Default::Symbolic)],
        domain: "QQ[x,y]",
        pattern: "a_n = sum_k S(n,k) x^k y^(n-k); alpha_{2k-1} = x, alpha_{2k} = k y",
        attribution: "Touchard, Flajolet",
    },
    FamilyDef {
        name: "f20_ratio",
        params: &[("a", Default::Symbolic), ("b", Default::Symbolic)],
        domain: "QQ[a,b]",
        pattern: "2F0(a,b)/2F0(a,b-1); alpha_{2j-1} = a+j-1, alpha_{2j} = b+j-1",
        attribution: "Euler, Gauss",
    },
    FamilyDef {
        name: "tan_ratio",
        params: &[],
        domain: "QQ",
        pattern: "tan(t)/t in u = t^2; alpha_k = 1/((2k-1)(2k+1))",
        attribution: "Lambert",
    },
    FamilyDef {
        name: "partial_theta",
        params: &[("q", Default::Symbolic)],
        domain: "QQ[q]",
        pattern: "a_n = q^(n(n-1)/2); alpha_{2j-1} = q^(2j-2), alpha_{2j} = q^(j-1)(q^j - 1)",
        attribution: "Eisenstein, Ramanujan",
    },
    FamilyDef {
        name: "rr_ratio",
        params: &[("q", Default::AlwaysSymbolic)],
        domain: "QQ(q)",
        pattern: "R(qt,q)/R(t,q); alpha_k = -q^(k-1)",
        attribution: "Rogers, Ramanujan",
    },
    FamilyDef {
        name: "rr_a_ratio",
        params: &[("a", Default::Required), ("q", Default::AlwaysSymbolic)],
        domain: "QQ(q), numeric a",
        pattern: "numerator over (aq;q)_n, denominator over (a;q)_n; \
                  alpha_k = -q^(k-1)/((1-aq^(k-1))(1-aq^k))",
        attribution: "Ramanujan",
    },
    FamilyDef {
        name: "rr_a_first_ratio",
        params: &[("a", Default::Required), ("q", Default::AlwaysSymbolic)],
        domain: "QQ(q), numeric a",
        pattern: "both sums over (a;q)_n; alpha_1 = -1/(1-a), \
                  alpha_k = -q^(k-1)/((1-aq^(k-2))(1-aq^(k-1)))",
        attribution: "Ramanujan",
    },
    FamilyDef {
        name: "secant_power",
        params: &[("x", Default::Symbolic)],
        domain: "QQ[x]",
        pattern: "a_n = E_2n(x), (sec t)^x = sum E_n(x) t^n/n!; alpha_n = n(x+n-1)",
        attribution: "Stieltjes, Rogers",
    },
    FamilyDef {
        name: "moment_probe",
        params: &[("eps", Default::Required)],
        domain: "QQ",
        pattern: "a_n = (1+eps) n! - eps/(n+1)^2; not a Stieltjes moment sequence for eps > 0",
        attribution: "Stieltjes moment problem",
    },
    FamilyDef {
        name: "motzkin",
        params: &[],
        domain: "QQ",
        pattern: "Motzkin numbers; J-fraction gamma_k = beta_k = 1",
        attribution: "Motzkin, Flajolet",
    },
    FamilyDef {
        name: "catalan",
        params: &[],
        domain: "QQ",
        pattern: "Catalan numbers; alpha_k = 1",
        attribution: "Catalan, Stieltjes",
    },
];

/// One line of the family listing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub params: Vec<&'static str>,
    pub domain: &'static str,
    pub pattern: &'static str,
    pub attribution: &'static str,
}

pub fn families() -> Vec<FamilyInfo> {
    FAMILIES
        .iter()
        .map(|f| FamilyInfo {
            name: f.name,
            params: f.params.iter().map(|p| p.0).collect(),
            domain: f.domain,
            pattern: f.pattern,
            attribution: f.attribution,
        })
        .collect()
}

fn family(name: &str) -> Result<&'static FamilyDef> {
    FAMILIES.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// Parameters resolved into one domain.
pub(crate) struct Ctx {
    pub domain: Domain,
    values: BTreeMap<&'static str, Coeff>,
}

impl Ctx {
    pub fn get(&self, name: &str) -> &Coeff {
        &self.values[name]
    }

    pub fn c(&self, n: i64) -> Coeff {
        Coeff::from_int(&self.domain, n)
    }

    pub fn r(&self, r: Rational) -> Coeff {
        Coeff::from_rational(&self.domain, r)
    }

    pub fn int(&self, n: &Integer) -> Coeff {
        Coeff::from_rational(&self.domain, Rational::from(n))
    }
}

/// Checks the parameter names and builds the domain: symbolic parameters
/// become polynomial variables (or the variable of Q(q)).
pub(crate) fn resolve(
    name: &str,
    specs: &'static [(&'static str, Default)],
    params: &BTreeMap<String, Param>,
) -> Result<Ctx> {
    for k in params.keys() {
        if !specs.iter().any(|(n, _)| n == k) {
            return Err(Error::BadParams(format!("`{name}` has no parameter `{k}`")));
        }
    }
    let mut symbolic = Vec::new();
    let mut field_var = None;
    let mut values = Vec::new();
    for &(p, def) in specs {
        match (params.get(p), def) {
            (Some(Param::Value(_)), Default::AlwaysSymbolic) => {
                return Err(Error::BadParams(format!("`{p}` of `{name}` must stay symbolic")))
            }
            (None | Some(Param::Symbolic), Default::AlwaysSymbolic) => field_var = Some(p),
            (Some(Param::Value(v)), _) => values.push((p, v.clone())),
            (Some(Param::Symbolic), Default::Required) => {
                return Err(Error::BadParams(format!("`{p}` of `{name}` must be a number")))
            }
            (None, Default::Required) => return Err(Error::BadParams(format!("`{name}` needs `{p}`"))),
            (Some(Param::Symbolic) | None, Default::Symbolic) => symbolic.push(p),
        }
    }
    let domain = match field_var {
        Some(v) => Domain::rational_function(v)?,
        None if symbolic.is_empty() => Domain::Rational,
        None => Domain::polynomial(&symbolic)?,
    };
    let mut map = BTreeMap::new();
    for p in symbolic.into_iter().chain(field_var) {
        map.insert(p, Coeff::variable(&domain, p)?);
    }
    for (p, v) in values {
        map.insert(p, Coeff::from_rational(&domain, v));
    }
    Ok(Ctx { domain, values: map })
}

fn series(ctx: &Ctx, coeffs: Vec<Coeff>) -> Result<TruncatedSeries> {
    TruncatedSeries::new(ctx.domain.clone(), coeffs)
}

/// Coefficients `c_0..c_order` of the named family.
pub fn generate(spec: &SeriesSpec) -> Result<TruncatedSeries> {
    let def = family(&spec.name)?;
    let ctx = resolve(def.name, def.params, &spec.params)?;
    let n_max = spec.order;
    let range = 0..=n_max;
    match def.name {
        "factorial" => series(&ctx, range.map(|n| ctx.int(&factorial(n))).collect()),
        "rising_factorial" => series(&ctx, range.map(|n| rising(ctx.get("a"), n)).collect()),
        "odd_double_factorial" => {
            let c = range.map(|n| if n == 0 { ctx.c(1) } else { ctx.int(&Integer::factorial_2(2 * n as u32 - 1).complete()) });
            series(&ctx, c.collect())
        }
        "bell" => {
            let st = stirling2_rows(n_max);
            let (x, y) = (ctx.get("x"), ctx.get("y"));
            let c = (0..=n_max)
                .map(|n| {
                    let mut acc = ctx.c(0);
                    for (k, s) in st[n].iter().enumerate() {
                        acc = &acc + &(&ctx.int(s) * &(&x.pow(k as u32) * &y.pow((n - k) as u32)));
                    }
                    acc
                })
                .collect();
            series(&ctx, c)
        }
        "f20_ratio" => {
            let (a, b) = (ctx.get("a"), ctx.get("b"));
            let b1 = b - &ctx.c(1);
            let f = |x: &Coeff, y: &Coeff| {
                let c = (0..=n_max)
                    .map(|n| (&rising(x, n) * &rising(y, n)).rational_scale(&Rational::from((1, factorial(n)))))
                    .collect();
                series(&ctx, c)
            };
            f(a, b)?.mul(&f(a, &b1)?.reciprocal()?)
        }
        "tan_ratio" => {
            let sinc = (0..=n_max).map(|n| ctx.r(signed_inverse(n, 2 * n + 1))).collect();
            let cos = (0..=n_max).map(|n| ctx.r(signed_inverse(n, 2 * n))).collect();
            series(&ctx, sinc)?.mul(&series(&ctx, cos)?.reciprocal()?)
        }
        "partial_theta" => {
            let q = ctx.get("q");
            series(&ctx, range.map(|n| q.pow((n * n.saturating_sub(1) / 2) as u32)).collect())
        }
        "rr_ratio" | "rr_a_ratio" | "rr_a_first_ratio" => {
            let fam = gk::gk_family_ctx(def.name.trim_end_matches("_ratio"), ctx)?;
            let g = |k: isize| TruncatedSeries::new(fam.domain().clone(), (0..=n_max).map(|n| fam.g(k, n)).collect());
            g(0)?.mul(&g(-1)?.reciprocal()?)
        }
        "secant_power" => {
            let x = ctx.get("x");
            let cos = series(&ctx, (0..=n_max).map(|n| ctx.r(signed_inverse(n, 2 * n))).collect())?;
            let e = cos.reciprocal()?.log1()?.scale(x)?.exp0()?;
            let c = e.coeffs().iter().enumerate().map(|(n, c)| c.rational_scale(&Rational::from(factorial(2 * n))));
            series(&ctx, c.collect())
        }
        "moment_probe" => {
            let eps = ctx.get("eps").as_rational().unwrap();
            let c = range
                .map(|n| {
                    let f = Rational::from(factorial(n)) * (Rational::from(1) + &eps);
                    ctx.r(f - eps.clone() / Rational::from((n + 1) * (n + 1)))
                })
                .collect();
            series(&ctx, c)
        }
        "motzkin" => {
            // sum_k binom(n, 2k) C_k
            let c = range
                .map(|n| {
                    let s: Integer = (0..=n / 2).map(|k| binomial(n as i64, 2 * k) * catalan(k)).sum();
                    ctx.int(&s)
                })
                .collect();
            series(&ctx, c)
        }
        "catalan" => series(&ctx, range.map(|n| ctx.int(&catalan(n))).collect()),
        _ => unreachable!(),
    }
}

fn catalan(n: usize) -> Integer {
    binomial(2 * n as i64, n) / Integer::from(n + 1)
}

/// `(-1)^n / m!`.
fn signed_inverse(n: usize, m: usize) -> Rational {
    let r = Rational::from((1, factorial(m)));
    if n % 2 == 1 {
        -r
    } else {
        r
    }
}

/// The first `m` S-fraction coefficients the family is known to have, or
/// `None` when the catalog records no closed form.
pub fn expected_alphas(spec: &SeriesSpec, m: usize) -> Result<Option<Vec<Coeff>>> {
    let def = family(&spec.name)?;
    let ctx = resolve(def.name, def.params, &spec.params)?;
    let k_of = |k: usize| k as i64;
    let out: Option<Vec<Coeff>> = match def.name {
        "factorial" => Some((1..=m).map(|k| ctx.c(k_of(k.div_ceil(2)))).collect()),
        "rising_factorial" => Some(
            (1..=m)
                .map(|k| {
                    let j = k_of(k.div_ceil(2));
                    if k % 2 == 1 {
                        ctx.get("a") + &ctx.c(j - 1)
                    } else {
                        ctx.c(j)
                    }
                })
                .collect(),
        ),
        "odd_double_factorial" => Some((1..=m).map(|k| ctx.c(k_of(k))).collect()),
        "bell" => Some(
            (1..=m)
                .map(|k| if k % 2 == 1 { ctx.get("x").clone() } else { &ctx.c(k_of(k / 2)) * ctx.get("y") })
                .collect(),
        ),
        "f20_ratio" => Some(
            (1..=m)
                .map(|k| {
                    let j = k_of(k.div_ceil(2));
                    let base = if k % 2 == 1 { ctx.get("a") } else { ctx.get("b") };
                    base + &ctx.c(j - 1)
                })
                .collect(),
        ),
        "tan_ratio" => Some((1..=m).map(|k| ctx.r(Rational::from((1, (2 * k - 1) * (2 * k + 1))))).collect()),
        "partial_theta" => {
            let q = ctx.get("q");
            Some(
                (1..=m)
                    .map(|k| {
                        let j = k.div_ceil(2) as u32;
                        if k % 2 == 1 {
                            q.pow(2 * j - 2)
                        } else {
                            &q.pow(j - 1) * &(&q.pow(j) - &ctx.c(1))
                        }
                    })
                    .collect(),
            )
        }
        "rr_ratio" | "rr_a_ratio" | "rr_a_first_ratio" => {
            let fam = gk::gk_family_ctx(def.name.trim_end_matches("_ratio"), ctx)?;
            Some((1..=m).map(|k| fam.alpha(k)).collect())
        }
        "secant_power" => Some((1..=m).map(|n| &ctx.c(k_of(n)) * &(ctx.get("x") + &ctx.c(k_of(n) - 1))).collect()),
        "catalan" => Some((1..=m).map(|_| ctx.c(1)).collect()),
        _ => None,
    };
    Ok(out)
}
