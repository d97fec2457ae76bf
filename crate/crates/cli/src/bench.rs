use std::io::Write;
use std::time::Instant;

use anyhow::{anyhow, Context};
use cfrac::catalog::{generate, Param, SeriesSpec};
use cfrac::expand::{expand_primitive, expand_refined};
use cfrac::{Domain, ExpansionShape, TruncatedSeries};
use serde_json::json;

use crate::json::{encode_fraction, SCHEMA};
use crate::{computing, AlgorithmChoice, BenchArgs, CmdResult, Failure};

/// One CSV line.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: &'static str,
    pub family: String,
    pub n: usize,
    pub ms: f64,
    /// Largest coefficient bit length (numeric runs) or total degree
    /// (symbolic runs) over the numerator table.
    pub size_metric: u32,
}

pub const CSV_HEADER: &str = "algorithm,family,N,ms,size-metric";

fn series(family: &str, n: usize) -> anyhow::Result<(TruncatedSeries, bool)> {
    let spec = match family {
        "factorial" => SeriesSpec::new("factorial", n),
        "rising_factorial" => SeriesSpec::new("rising_factorial", n).with("a", Param::Symbolic),
        other => return Err(anyhow!("bench supports factorial and rising_factorial, not `{other}`")),
    };
    let f = generate(&spec)?;
    let symbolic = f.domain() != &Domain::Rational;
    Ok((f, symbolic))
}

/// Warm-up run discarded, then the median of three.
fn median_ms(mut f: impl FnMut()) -> f64 {
    f();
    let mut t: Vec<f64> = (0..3)
        .map(|_| {
            let s = Instant::now();
            f();
            s.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    t.sort_by(f64::total_cmp);
    t[1]
}

pub fn bench(a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let shape = ExpansionShape::c_fraction();
    let mut records = Vec::new();
    let io = |e: std::io::Error| Failure::Malformed(e.into());
    writeln!(out, "{CSV_HEADER}").map_err(io)?;
    for &n in &a.ns {
        let (f, symbolic) = series(&a.family, n)?;
        let p = computing(expand_primitive(&f, &shape))?;
        let (r, table) = computing(expand_refined(&f, &shape, None))?;
        if p != r {
            return Err(Failure::Disagreement(json!({
                "schema": SCHEMA,
                "error": {
                    "kind": "AlgorithmDisagreement",
                    "message": format!("{} at N = {n}: the two algorithms produced different fractions", a.family),
                    "primitive": encode_fraction(&p),
                    "refined": encode_fraction(&r),
                }
            })));
        }
        let cells = table.rows().iter().flat_map(|row| row.coeffs().iter());
        let size_metric = if symbolic { cells.map(|c| c.degree()).max() } else { cells.map(|c| c.bit_size()).max() };
        let size_metric = size_metric.unwrap_or(0);
        let mut run = |algorithm: &'static str, ms: f64| -> CmdResult {
            let rec = BenchRecord { algorithm, family: a.family.clone(), n, ms, size_metric };
            writeln!(out, "{},{},{},{:.3},{}", rec.algorithm, rec.family, rec.n, rec.ms, rec.size_metric).map_err(io)?;
            records.push(rec);
            Ok(())
        };
        if a.algorithms != AlgorithmChoice::Refined {
            run("primitive", median_ms(|| drop(expand_primitive(&f, &shape))))?;
        }
        if a.algorithms != AlgorithmChoice::Primitive {
            run("refined", median_ms(|| drop(expand_refined(&f, &shape, None))))?;
        }
    }
    if let Some(path) = &a.emit_plot {
        let mut s = String::from("# algorithm N ms log10(N) log10(ms)\n");
        for r in &records {
            let lms = if r.ms > 0.0 { r.ms.log10() } else { f64::NEG_INFINITY };
            s.push_str(&format!("{} {} {:.3} {:.6} {:.6}\n", r.algorithm, r.n, r.ms, (r.n as f64).log10(), lms));
        }
        std::fs::write(path, s).with_context(|| format!("writing {path}"))?;
    }
    Ok(())
}
