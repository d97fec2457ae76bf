//! The `cfrac/1` JSON encoding. Every exact value travels as a string in the
//! text encoding of its domain.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context};
use cfrac::catalog::{Param, SeriesSpec};
use cfrac::{CFraction, CfTerm, Coeff, Domain, Status, TruncatedSeries};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "cfrac/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DomainJson {
    Rational,
    Polynomial { variables: Vec<String> },
    RationalFunction { variable: String },
}

/// A domain as written in input files: the tagged object, or the short
/// text form `QQ`, `QQ[x,y]`, `QQ(q)`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum DomainInput {
    Text(String),
    Tagged(DomainJson),
}

impl DomainInput {
    pub fn resolve(&self) -> anyhow::Result<Domain> {
        match self {
            DomainInput::Text(s) => parse_domain(s),
            DomainInput::Tagged(d) => domain_from_json(d),
        }
    }
}

pub fn domain_to_json(d: &Domain) -> DomainJson {
    match d {
        Domain::Rational => DomainJson::Rational,
        Domain::Polynomial(vs) => DomainJson::Polynomial { variables: vs.to_vec() },
        Domain::RationalFunction(v) => DomainJson::RationalFunction { variable: v.to_string() },
    }
}

pub fn domain_from_json(d: &DomainJson) -> anyhow::Result<Domain> {
    Ok(match d {
        DomainJson::Rational => Domain::Rational,
        DomainJson::Polynomial { variables } => Domain::polynomial(variables)?,
        DomainJson::RationalFunction { variable } => Domain::rational_function(variable)?,
    })
}

pub fn parse_domain(s: &str) -> anyhow::Result<Domain> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = |open: char, close: char| {
        s.strip_prefix("QQ").and_then(|r| r.strip_prefix(open)).and_then(|r| r.strip_suffix(close))
    };
    if s == "QQ" || s == "Q" {
        Ok(Domain::Rational)
    } else if let Some(vs) = inner('[', ']') {
        Ok(Domain::polynomial(&vs.split(',').collect::<Vec<_>>())?)
    } else if let Some(v) = inner('(', ')') {
        Ok(Domain::rational_function(v)?)
    } else {
        bail!("unrecognized domain `{s}` (expected QQ, QQ[x,...] or QQ(q))")
    }
}

/// A coefficient in an input file: its text encoding, or a bare JSON integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CoeffInput {
    Text(String),
    Int(i64),
}

impl CoeffInput {
    fn text(&self) -> String {
        match self {
            CoeffInput::Text(s) => s.clone(),
            CoeffInput::Int(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SeriesInput {
    Literal {
        domain: DomainInput,
        coeffs: Vec<CoeffInput>,
        order: Option<usize>,
    },
    Family {
        family: String,
        #[serde(default)]
        params: BTreeMap<String, CoeffInput>,
        order: Option<usize>,
    },
}

/// Accepts series names with or without the `_ratio` suffix.
pub fn family_name(name: &str) -> String {
    let known = cfrac::catalog::families();
    if known.iter().any(|f| f.name == name) {
        return name.to_string();
    }
    let with = format!("{name}_ratio");
    if known.iter().any(|f| f.name == with) {
        return with;
    }
    name.to_string()
}

pub fn family_spec(name: &str, params: &[(String, String)], order: usize) -> anyhow::Result<SeriesSpec> {
    let mut spec = SeriesSpec::new(&family_name(name), order);
    for (k, v) in params {
        spec = spec.with_value(k, v)?;
    }
    Ok(spec)
}

pub fn param_map(params: &[(String, String)]) -> anyhow::Result<BTreeMap<String, Param>> {
    params.iter().map(|(k, v)| Ok((k.clone(), v.parse::<Param>()?))).collect()
}

impl SeriesInput {
    /// Builds the series through `t^order` (`order` overrides the file).
    pub fn build(&self, order: Option<usize>) -> anyhow::Result<TruncatedSeries> {
        match self {
            SeriesInput::Literal { domain, coeffs, order: file_order } => {
                let d = domain.resolve()?;
                let cs = coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| Coeff::parse(&d, &c.text()).with_context(|| format!("coefficient {i}")))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                if cs.is_empty() {
                    bail!("no coefficients");
                }
                let have = cs.len() - 1;
                let want = order.or(*file_order).unwrap_or(have);
                if want > have {
                    bail!("order {want} requested but only {} coefficients given", cs.len());
                }
                Ok(TruncatedSeries::new(d, cs)?.truncate(want))
            }
            SeriesInput::Family { family, params, order: file_order } => {
                let n = order.or(*file_order).ok_or_else(|| anyhow!("no order given"))?;
                let ps: Vec<(String, String)> = params.iter().map(|(k, v)| (k.clone(), v.text())).collect();
                Ok(cfrac::catalog::generate(&family_spec(family, &ps, n)?)?)
            }
        }
    }
}

pub fn read_series_input(path: &str) -> anyhow::Result<SeriesInput> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("{path} is not a valid series description"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub delta: Vec<String>,
    pub alpha: String,
    pub p: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StatusJson {
    Terminated { depth: usize, witnessed_through: usize },
    Inconclusive { remaining_budget: usize },
}

impl From<Status> for StatusJson {
    fn from(s: Status) -> Self {
        match s {
            Status::Terminated { depth, witnessed_through } => StatusJson::Terminated { depth, witnessed_through },
            Status::Inconclusive { remaining_budget } => StatusJson::Inconclusive { remaining_budget },
        }
    }
}

impl From<StatusJson> for Status {
    fn from(s: StatusJson) -> Self {
        match s {
            StatusJson::Terminated { depth, witnessed_through } => Status::Terminated { depth, witnessed_through },
            StatusJson::Inconclusive { remaining_budget } => Status::Inconclusive { remaining_budget },
        }
    }
}

/// A [`CFraction`] with every coefficient as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionJson {
    pub domain: DomainJson,
    pub alpha0: String,
    pub terms: Vec<TermJson>,
    pub tail_delta: Vec<String>,
    pub status: StatusJson,
}

fn strings(cs: &[Coeff]) -> Vec<String> {
    cs.iter().map(|c| c.to_string()).collect()
}

pub fn encode_fraction(cf: &CFraction) -> FractionJson {
    FractionJson {
        domain: domain_to_json(&cf.domain),
        alpha0: cf.alpha0.to_string(),
        terms: cf
            .terms
            .iter()
            .map(|t| TermJson { delta: strings(&t.delta), alpha: t.alpha.to_string(), p: t.p })
            .collect(),
        tail_delta: strings(&cf.tail_delta),
        status: cf.status.into(),
    }
}

pub fn decode_fraction(j: &FractionJson) -> anyhow::Result<CFraction> {
    let d = domain_from_json(&j.domain)?;
    let parse = |s: &String| Coeff::parse(&d, s).map_err(anyhow::Error::from);
    let list = |v: &[String]| v.iter().map(parse).collect::<anyhow::Result<Vec<_>>>();
    let terms = j
        .terms
        .iter()
        .map(|t| Ok(CfTerm { delta: list(&t.delta)?, alpha: parse(&t.alpha)?, p: t.p }))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(CFraction {
        alpha0: parse(&j.alpha0)?,
        terms,
        tail_delta: list(&j.tail_delta)?,
        status: j.status.into(),
        domain: d,
    })
}

/// Reads a fraction back from an expansion report or a bare fraction object.
pub fn fraction_from_value(v: &Value) -> anyhow::Result<CFraction> {
    let j: FractionJson = serde_json::from_value(v.clone())?;
    decode_fraction(&j)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub schema: String,
    #[serde(flatten)]
    pub fraction: FractionJson,
    pub algorithm: String,
    pub shape: String,
    pub input_digest: String,
    pub timing_ms: f64,
}

/// SHA-256 over the domain and the canonical coefficient texts.
pub fn series_digest(f: &TruncatedSeries) -> String {
    let mut h = Sha256::new();
    h.update(f.domain().to_string());
    for c in f.coeffs() {
        h.update([0u8]);
        h.update(c.to_string());
    }
    let bytes = h.finalize();
    let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn error_object(e: &cfrac::Error) -> Value {
    let mut err = json!({ "kind": e.kind(), "message": e.root().to_string() });
    if let cfrac::Error::Interrupted { level, partial, .. } = e {
        err["level"] = json!(level);
        err["partial"] = serde_json::to_value(encode_fraction(partial)).unwrap();
    }
    json!({ "schema": SCHEMA, "error": err })
}

pub fn coeff_rows(rows: &[Vec<Coeff>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| strings(r)).collect()
}
