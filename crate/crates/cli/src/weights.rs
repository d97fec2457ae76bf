use anyhow::{bail, Context};
use cfrac::paths::PathWeights;
use cfrac::{Coeff, Domain};

use crate::json::parse_domain;
use crate::WeightArgs;

/// Splits a weight list; a trailing `..` on the last entry is accepted and
/// means what an unmarked list means already: the last value repeats.
fn split(list: &str) -> anyhow::Result<Vec<String>> {
    let mut items: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
    if let Some(last) = items.last_mut() {
        *last = last.trim_end_matches('.').to_string();
        if last.is_empty() {
            items.pop();
        }
    }
    if items.is_empty() || items.iter().any(|s| s.is_empty()) {
        bail!("empty entry in weight list `{list}`");
    }
    Ok(items)
}

/// Identifiers appearing in the weight texts, in order of first use.
fn variables(texts: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for t in texts {
        let mut cur = String::new();
        for ch in t.chars().chain(std::iter::once(' ')) {
            if ch.is_ascii_alphanumeric() || ch == '_' {
                cur.push(ch);
            } else {
                if cur.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') && !out.contains(&cur) {
                    out.push(cur.clone());
                }
                cur.clear();
            }
        }
    }
    out
}

fn repeat_to(items: &[Coeff], n: usize) -> Vec<Coeff> {
    (0..n.max(items.len())).map(|i| items[i.min(items.len() - 1)].clone()).collect()
}

impl WeightArgs {
    pub fn given(&self) -> bool {
        self.alphas.is_some() || self.betas.is_some()
    }

    /// The weights, each list padded to `len` entries by repeating its last one.
    pub fn build(&self, len: usize) -> anyhow::Result<PathWeights> {
        let lists: Vec<(&str, Vec<String>)> = [("alphas", &self.alphas), ("betas", &self.betas), ("gammas", &self.gammas)]
            .into_iter()
            .filter_map(|(n, l)| l.as_ref().map(|l| split(l).map(|v| (n, v))))
            .collect::<anyhow::Result<_>>()?;
        if lists.is_empty() {
            bail!("no weights given (use --alphas, or --betas with --gammas)");
        }
        let dom = match &self.domain {
            Some(d) => parse_domain(d)?,
            None => {
                let all: Vec<String> = lists.iter().flat_map(|(_, v)| v.iter().cloned()).collect();
                let vars = variables(&all);
                if vars.is_empty() {
                    Domain::Rational
                } else {
                    Domain::polynomial(&vars)?
                }
            }
        };
        let parse = |name: &str, v: &[String]| -> anyhow::Result<Vec<Coeff>> {
            let cs = v
                .iter()
                .map(|s| Coeff::parse(&dom, s).with_context(|| format!("{name} entry `{s}`")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(repeat_to(&cs, len))
        };
        let get = |name: &str| lists.iter().find(|(n, _)| *n == name).map(|(_, v)| v);
        Ok(match get("alphas") {
            Some(a) => PathWeights::stieltjes(&dom, parse("alphas", a)?)?,
            None => {
                let b = get("betas").context("--betas is required")?;
                let g = get("gammas").context("--gammas is required")?;
                PathWeights::jacobi(&dom, parse("betas", b)?, parse("gammas", g)?)?
            }
        })
    }
}
