use std::io::Write;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use cfrac::catalog::{expected_alphas, families, generate, gk_family, gk_family_names};
use cfrac::expand::{
    cf_to_series, euler_gauss_verify, expand_primitive, expand_refined, stieltjes_positivity_scan, ScanOutcome,
};
use cfrac::paths::{
    flajolet_check, g_table_correspondence_check, hankel_factorization_check, jacobi_rogers_table,
    stieltjes_tables, PathWeights,
};
use cfrac::{CFraction, ExpansionShape, Status, TruncatedSeries};
use serde_json::{json, Value};

use crate::json::{self, encode_fraction, family_spec, param_map, read_series_input, ExpansionReport, SCHEMA};
use crate::{computing, print_json, Algorithm, Check, CmdResult, ExpandArgs, Failure, Kind, MomentsArgs, Output};
use crate::{SeriesArgs, TableArgs, VerifyArgs};

fn io(r: std::io::Result<()>) -> CmdResult {
    r.map_err(|e| Failure::Malformed(e.into()))
}

pub(crate) fn load_series(s: &SeriesArgs, order: Option<usize>) -> anyhow::Result<TruncatedSeries> {
    match (&s.input, &s.family) {
        (Some(path), _) => {
            if !s.params.is_empty() {
                bail!("--params only applies to --family");
            }
            read_series_input(path)?.build(order)
        }
        (None, Some(name)) => {
            let n = order.context("--order is required with --family")?;
            Ok(generate(&family_spec(name, &s.params, n)?)?)
        }
        (None, None) => bail!("give --input or --family"),
    }
}

pub(crate) fn parse_shape(s: &str) -> anyhow::Result<ExpansionShape> {
    Ok(match s.trim() {
        "c" | "C" => ExpansionShape::c_fraction(),
        "s" | "S" => ExpansionShape::s_fraction(),
        "j" | "J" => ExpansionShape::j_fraction(),
        other => {
            let list = other.strip_prefix("custom:").ok_or_else(|| anyhow!("unknown shape `{other}`"))?;
            let m = list
                .split(',')
                .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad M entry `{x}`")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            ExpansionShape::custom(m)
        }
    })
}

fn status_text(s: &Status) -> String {
    match s {
        Status::Terminated { depth, witnessed_through } => {
            format!("terminated at depth {depth} (zero residual through t^{witnessed_through})")
        }
        Status::Inconclusive { remaining_budget } => format!("inconclusive (remaining budget {remaining_budget})"),
    }
}

fn write_fraction_text(out: &mut dyn Write, cf: &CFraction) -> std::io::Result<()> {
    writeln!(out, "domain: {}", cf.domain)?;
    writeln!(out, "alpha_0 = {}", cf.alpha0)?;
    for (i, t) in cf.terms.iter().enumerate() {
        let k = i + 1;
        if t.delta.is_empty() {
            writeln!(out, "level {k}: alpha = {}, p = {}", t.alpha, t.p)?;
        } else {
            let d: Vec<String> = t.delta.iter().map(|c| c.to_string()).collect();
            writeln!(out, "level {k}: delta = [{}], alpha = {}, p = {}", d.join(", "), t.alpha, t.p)?;
        }
    }
    if !cf.tail_delta.is_empty() {
        let d: Vec<String> = cf.tail_delta.iter().map(|c| c.to_string()).collect();
        writeln!(out, "tail delta = [{}]", d.join(", "))?;
    }
    writeln!(out, "status: {}", status_text(&cf.status))
}

pub fn expand(a: &ExpandArgs, out: &mut dyn Write) -> CmdResult {
    let f = load_series(&a.series, a.order)?;
    let shape = parse_shape(&a.shape)?;
    let g = match &a.g_minus_one {
        Some(p) => Some(read_series_input(p)?.build(Some(f.order())).context("--g-minus-one")?),
        None => None,
    };
    if g.is_some() && a.algorithm == Algorithm::Primitive {
        return Err(anyhow!("--g-minus-one needs the refined algorithm").into());
    }
    let start = Instant::now();
    let cf = computing(match a.algorithm {
        Algorithm::Primitive => expand_primitive(&f, &shape),
        Algorithm::Refined => expand_refined(&f, &shape, g.as_ref()).map(|r| r.0),
    })?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    match a.output {
        Output::Json => {
            let report = ExpansionReport {
                schema: SCHEMA.into(),
                fraction: encode_fraction(&cf),
                algorithm: if a.algorithm == Algorithm::Primitive { "primitive" } else { "refined" }.into(),
                shape: a.shape.trim().to_string(),
                input_digest: json::series_digest(&f),
                timing_ms: ms,
            };
            io(print_json(out, &report))
        }
        Output::Text => io(write_fraction_text(out, &cf)),
    }
}

/// Prints a check outcome and maps a failure to [`Failure::CheckFailed`].
fn report(out: &mut dyn Write, output: Output, check: &str, passed: bool, detail: String, extra: Value) -> CmdResult {
    match output {
        Output::Json => {
            let mut v = json!({ "schema": SCHEMA, "check": check, "passed": passed, "detail": detail });
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            io(print_json(out, &v))?;
        }
        Output::Text => {
            let verdict = if passed { "pass" } else { "FAIL" };
            io(writeln!(out, "{check}: {verdict}: {detail}"))?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}

fn weights_for(v: &VerifyArgs, len: usize) -> anyhow::Result<PathWeights> {
    if !v.weights.given() {
        bail!("this check needs --alphas, or --betas with --gammas");
    }
    v.weights.build(len)
}

pub fn verify(v: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    match v.check {
        Check::EulerGauss => {
            let name = v.series.family.as_deref().context("--family is required (one of the g_k families)")?;
            if !gk_family_names().contains(&name.trim_end_matches("_ratio")) {
                return Err(anyhow!("no closed-form g_k for `{name}`; known: {}", gk_family_names().join(", ")).into());
            }
            let fam = gk_family(name, &param_map(&v.series.params)?).map_err(anyhow::Error::from)?;
            let order = v.order.unwrap_or(8);
            let data = fam.materialize(v.levels, order);
            let r = computing(euler_gauss_verify(&data.g, &data.deltas, &data.a_terms, order))?;
            let (detail, extra) = match &r.first_failure {
                None => (format!("{} levels through t^{order}", r.levels), json!({})),
                Some(m) => (
                    format!("k = {}, n = {}: lhs {} != rhs {}", m.k, m.n, m.lhs, m.rhs),
                    json!({ "counterexample": { "k": m.k, "n": m.n, "lhs": m.lhs.to_string(), "rhs": m.rhs.to_string() } }),
                ),
            };
            report(out, v.output, "euler-gauss", r.passed(), detail, extra)
        }
        Check::Flajolet => {
            let order = v.order.unwrap_or(8);
            let w = weights_for(v, 2 * order + 4)?;
            let r = computing(flajolet_check(&w, order))?;
            let (detail, extra) = if let Some(m) = r.mismatches.first() {
                (
                    format!("moment {}: {} leg gives {}, expected {}", m.n, m.leg, m.found, m.expected),
                    json!({ "counterexample": { "n": m.n, "leg": m.leg.to_string(),
                        "expected": m.expected.to_string(), "found": m.found.to_string() } }),
                )
            } else if let Some(m) = r.product_mismatches.first() {
                (
                    format!("paths 0 -> {} of length {}: {} vs product {}", m.l, m.m, m.enumeration, m.product),
                    json!({ "counterexample": { "l": m.l, "m": m.m,
                        "enumeration": m.enumeration.to_string(), "product": m.product.to_string() } }),
                )
            } else {
                (
                    format!("moments 0..={order} agree three ways; products checked for l <= {}", r.product_levels),
                    json!({}),
                )
            };
            report(out, v.output, "flajolet", r.passed(), detail, extra)
        }
        Check::Hankel => {
            let size = v.size.unwrap_or(6);
            let a = load_series(&v.series, v.order.or(v.series.family.as_ref().map(|_| 2 * size + 1)))?;
            let w = if v.weights.given() {
                v.weights.build(2 * size + 4)?
            } else {
                let name = v.series.family.as_deref().context("give weights, or a family with a known pattern")?;
                let spec = family_spec(name, &v.series.params, a.order())?;
                let al = expected_alphas(&spec, 2 * size + 2)
                    .map_err(anyhow::Error::from)?
                    .ok_or_else(|| anyhow!("`{name}` has no closed-form pattern; give the weights"))?;
                PathWeights::stieltjes(a.domain(), al).map_err(anyhow::Error::from)?
            };
            let r = computing(hankel_factorization_check(a.coeffs(), &w, size))?;
            let mut lines = Vec::new();
            let mut extra = json!({});
            for c in &r.checks {
                match &c.mismatch {
                    None => lines.push(format!("ok: {}", c.describe())),
                    Some((i, j, h, p)) => {
                        lines.push(format!("entry ({i}, {j}): Hankel {h} != product {p}: {}", c.describe()));
                        if extra.get("counterexample").is_none() {
                            extra = json!({ "counterexample": { "i": i, "j": j,
                                "hankel": h.to_string(), "product": p.to_string() } });
                        }
                    }
                }
            }
            report(out, v.output, "hankel", r.passed(), lines.join("; "), extra)
        }
        Check::Gtable => {
            let size = v.size.unwrap_or(6);
            let w = weights_for(v, 2 * size + 4)?;
            let r = computing(g_table_correspondence_check(&w, size))?;
            let (detail, extra) = match &r.mismatch {
                None => (format!("{} entries of g_k match the table", r.checked), json!({})),
                Some((k, n, g, t)) => (
                    format!("g_{{{k},{n}}} = {g} but the table has {t}"),
                    json!({ "counterexample": { "k": k, "n": n, "g": g.to_string(), "table": t.to_string() } }),
                ),
            };
            report(out, v.output, "gtable", r.passed(), detail, extra)
        }
        Check::Roundtrip => {
            let f = load_series(&v.series, v.order)?;
            let shape = parse_shape(&v.shape)?;
            let p = computing(expand_primitive(&f, &shape))?;
            let (r, _) = computing(expand_refined(&f, &shape, None))?;
            if p != r {
                let detail = "primitive and refined expansions differ".to_string();
                return report(out, v.output, "roundtrip", false, detail, json!({}));
            }
            let n = r.determined_order().unwrap_or(f.order()).min(f.order());
            let back = computing(cf_to_series(&r, n))?;
            let bad = (0..=n).find(|&i| back.coeffs()[i] != f.coeffs()[i]);
            let (detail, extra) = match bad {
                None => (format!("depth {}, series recovered through t^{n}", r.depth()), json!({})),
                Some(i) => (
                    format!("t^{i}: fraction gives {}, input has {}", back.coeffs()[i], f.coeffs()[i]),
                    json!({ "counterexample": { "n": i } }),
                ),
            };
            report(out, v.output, "roundtrip", bad.is_none(), detail, extra)
        }
    }
}

pub fn table(a: &TableArgs, out: &mut dyn Write) -> CmdResult {
    let w = a.weights.build(2 * a.size + 4)?;
    let t = computing(match a.kind {
        Kind::J => jacobi_rogers_table(&w, a.size),
        Kind::S => stieltjes_tables(&w, a.size).map(|t| t.0),
        Kind::Sprime => stieltjes_tables(&w, a.size).map(|t| t.1),
    })?;
    match a.output {
        Output::Json => io(print_json(
            out,
            &json!({
                "schema": SCHEMA,
                "kind": t.kind.to_string(),
                "domain": json::domain_to_json(&t.domain),
                "rows": json::coeff_rows(&t.rows),
            }),
        )),
        Output::Text => {
            for row in &t.rows {
                let r: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                io(writeln!(out, "{}", r.join(" ")))?;
            }
            Ok(())
        }
    }
}

pub fn moments(a: &MomentsArgs, out: &mut dyn Write) -> CmdResult {
    if a.series.family.is_some() && a.budget.is_none() {
        return Err(anyhow!("--budget is required with --family").into());
    }
    let s = load_series(&a.series, a.budget)?;
    let r = computing(stieltjes_positivity_scan(&s))?;
    let v = match &r {
        ScanOutcome::Negative { index, alpha } => {
            json!({ "schema": SCHEMA, "budget": s.order(), "first_negative": { "index": index, "alpha": alpha.to_string() } })
        }
        ScanOutcome::NoneFound(st) => {
            json!({ "schema": SCHEMA, "budget": s.order(), "first_negative": null, "status": json::StatusJson::from(*st) })
        }
    };
    match a.output {
        Output::Json => io(print_json(out, &v)),
        Output::Text => io(match &r {
            ScanOutcome::Negative { index, alpha } => writeln!(out, "n = {index} (alpha_{index} = {alpha})"),
            ScanOutcome::NoneFound(st) => writeln!(out, "NoneFound: {}", status_text(st)),
        }),
    }
}

pub fn catalog_list(output: Output, out: &mut dyn Write) -> CmdResult {
    let fams = families();
    match output {
        Output::Json => {
            let list: Vec<Value> = fams
                .iter()
                .map(|f| {
                    json!({ "name": f.name, "params": f.params, "domain": f.domain,
                        "pattern": f.pattern, "attribution": f.attribution })
                })
                .collect();
            io(print_json(out, &json!({ "schema": SCHEMA, "families": list, "gk_families": gk_family_names() })))
        }
        Output::Text => {
            let w = fams.iter().map(|f| f.name.len()).max().unwrap_or(0);
            for f in &fams {
                let params = if f.params.is_empty() { "-".to_string() } else { f.params.join(",") };
                io(writeln!(out, "{:w$}  params: {params}", f.name))?;
                io(writeln!(out, "{:w$}  domain: {}", "", f.domain))?;
                io(writeln!(out, "{:w$}  {}", "", f.pattern))?;
                io(writeln!(out, "{:w$}  after {}", "", f.attribution))?;
            }
            io(writeln!(out, "closed-form g_k families: {}", gk_family_names().join(", ")))
        }
    }
}
