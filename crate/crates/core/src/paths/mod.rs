//! Weighted Motzkin and Dyck paths.
//!
//! A Motzkin path uses rises `(1,1)`, level steps `(1,0)` and falls
//! `(1,-1)`; a Dyck path has no level steps. A rise from height `i` has
//! weight `a_i`, a fall from height `i` has weight `b_i`, a level step at
//! height `i` has weight `c_i`. Flajolet's theorem identifies the generating
//! function of paths from height 0 back to 0 with the J-fraction with
//! `beta_i = a_{i-1} b_i` and `gamma_i = c_i`.

mod checks;
mod tables;

pub use checks::{
    flajolet_check, fraction_from_weights, g_table_correspondence_check, hankel_factorization_check, BlockCheck,
    CorrespondenceReport, FlajoletLegs, FlajoletReport, HankelForm, HankelReport, Leg, LegMismatch, ProductMismatch,
};
pub use tables::{check_stieltjes_recurrences, jacobi_rogers_table, stieltjes_tables, TableKind, TriangularTable};

use crate::coeffs::{Coeff, Domain};
use crate::error::{Error, Result};

/// Longest Motzkin path the exhaustive enumerator accepts.
pub const ENUMERATION_LIMIT: usize = 14;

/// Longest Dyck path the enumerator accepts; `2^22` step sequences is below
/// the `3^14` of the Motzkin bound.
pub const DYCK_ENUMERATION_LIMIT: usize = 22;

impl PathMode {
    /// Longest path [`enumerate_weighted_paths`] accepts in this mode.
    pub fn enumeration_limit(self) -> usize {
        match self {
            PathMode::Motzkin => ENUMERATION_LIMIT,
            PathMode::Dyck => DYCK_ENUMERATION_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// Rises 1, falls from `i` weigh `betas[i-1]`, levels at `i` weigh `gammas[i]`.
    Jacobi { betas: Vec<Coeff>, gammas: Vec<Coeff> },
    /// Dyck paths: rises 1, falls from `i` weigh `alphas[i-1]`.
    Stieltjes { alphas: Vec<Coeff> },
    /// `rises[i] = a_i`, `falls[i-1] = b_i`, `levels[i] = c_i`.
    General { rises: Vec<Coeff>, falls: Vec<Coeff>, levels: Vec<Coeff> },
}

/// Step weights of a path family, all in one domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWeights {
    domain: Domain,
    kind: WeightKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathMode {
    Motzkin,
    Dyck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Rise,
    Level,
    Fall,
}

fn check_all(domain: &Domain, lists: &[&[Coeff]]) -> Result<()> {
    for c in lists.iter().flat_map(|l| l.iter()) {
        if !c.in_domain(domain) {
            return Err(Error::DomainMismatch(domain.to_string(), c.domain().to_string()));
        }
    }
    Ok(())
}

fn pick<'a>(list: &'a [Coeff], i: usize, what: &str, shown: usize) -> Result<&'a Coeff> {
    list.get(i).ok_or_else(|| Error::MissingWeight(format!("{what}_{shown}")))
}

impl PathWeights {
    pub fn jacobi(domain: &Domain, betas: Vec<Coeff>, gammas: Vec<Coeff>) -> Result<Self> {
        check_all(domain, &[&betas, &gammas])?;
        Ok(PathWeights { domain: domain.clone(), kind: WeightKind::Jacobi { betas, gammas } })
    }

    pub fn stieltjes(domain: &Domain, alphas: Vec<Coeff>) -> Result<Self> {
        check_all(domain, &[&alphas])?;
        Ok(PathWeights { domain: domain.clone(), kind: WeightKind::Stieltjes { alphas } })
    }

    pub fn general(domain: &Domain, rises: Vec<Coeff>, falls: Vec<Coeff>, levels: Vec<Coeff>) -> Result<Self> {
        check_all(domain, &[&rises, &falls, &levels])?;
        Ok(PathWeights { domain: domain.clone(), kind: WeightKind::General { rises, falls, levels } })
    }

    /// Jacobi weights `beta_i = beta(i)` for `1 ≤ i ≤ n`, `gamma_i = gamma(i)`
    /// for `0 ≤ i < n`.
    pub fn jacobi_from_fn(
        domain: &Domain,
        n: usize,
        beta: impl Fn(usize) -> Coeff,
        gamma: impl Fn(usize) -> Coeff,
    ) -> Result<Self> {
        Self::jacobi(domain, (1..=n).map(beta).collect(), (0..n).map(gamma).collect())
    }

    /// `alpha_i = alpha(i)` for `1 ≤ i ≤ n`.
    pub fn stieltjes_from_fn(domain: &Domain, n: usize, alpha: impl Fn(usize) -> Coeff) -> Result<Self> {
        Self::stieltjes(domain, (1..=n).map(alpha).collect())
    }

    /// Independent indeterminates `beta1..beta{n}`, `gamma0..gamma{n-1}`.
    pub fn symbolic_jacobi(n: usize) -> Self {
        let names: Vec<String> =
            (1..=n).map(|i| format!("beta{i}")).chain((0..n).map(|i| format!("gamma{i}"))).collect();
        let dom = Domain::polynomial(&names).expect("valid names");
        let v = |s: &String| Coeff::variable(&dom, s).unwrap();
        let (b, g) = names.split_at(n);
        Self::jacobi(&dom, b.iter().map(v).collect(), g.iter().map(v).collect()).unwrap()
    }

    /// Independent indeterminates `alpha1..alpha{n}`.
    pub fn symbolic_stieltjes(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("alpha{i}")).collect();
        let dom = Domain::polynomial(&names).expect("valid names");
        let alphas = names.iter().map(|s| Coeff::variable(&dom, s).unwrap()).collect();
        Self::stieltjes(&dom, alphas).unwrap()
    }

    /// Independent indeterminates `a0..a{n-1}`, `b1..b{n}`, `c0..c{n-1}`.
    pub fn symbolic_general(n: usize) -> Self {
        let names: Vec<String> = (0..n)
            .map(|i| format!("a{i}"))
            .chain((1..=n).map(|i| format!("b{i}")))
            .chain((0..n).map(|i| format!("c{i}")))
            .collect();
        let dom = Domain::polynomial(&names).expect("valid names");
        let v: Vec<Coeff> = names.iter().map(|s| Coeff::variable(&dom, s).unwrap()).collect();
        Self::general(&dom, v[..n].to_vec(), v[n..2 * n].to_vec(), v[2 * n..].to_vec()).unwrap()
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    pub fn is_stieltjes(&self) -> bool {
        matches!(self.kind, WeightKind::Stieltjes { .. })
    }

    /// The natural path family: Dyck for Stieltjes weights, else Motzkin.
    pub fn mode(&self) -> PathMode {
        if self.is_stieltjes() {
            PathMode::Dyck
        } else {
            PathMode::Motzkin
        }
    }

    /// Weight of a rise starting at height `h`.
    pub fn rise(&self, h: usize) -> Result<Coeff> {
        match &self.kind {
            WeightKind::General { rises, .. } => pick(rises, h, "a", h).cloned(),
            _ => Ok(Coeff::one(&self.domain)),
        }
    }

    /// Weight of a fall starting at height `h ≥ 1`.
    pub fn fall(&self, h: usize) -> Result<Coeff> {
        if h == 0 {
            return Err(Error::IndexOutOfRange("no fall from height 0".into()));
        }
        match &self.kind {
            WeightKind::Jacobi { betas, .. } => pick(betas, h - 1, "beta", h).cloned(),
            WeightKind::Stieltjes { alphas } => pick(alphas, h - 1, "alpha", h).cloned(),
            WeightKind::General { falls, .. } => pick(falls, h - 1, "b", h).cloned(),
        }
    }

    /// Weight of a level step at height `h`; zero for Stieltjes weights.
    pub fn level(&self, h: usize) -> Result<Coeff> {
        match &self.kind {
            WeightKind::Jacobi { gammas, .. } => pick(gammas, h, "gamma", h).cloned(),
            WeightKind::Stieltjes { .. } => Ok(Coeff::zero(&self.domain)),
            WeightKind::General { levels, .. } => pick(levels, h, "c", h).cloned(),
        }
    }

    /// `alpha_i` of Stieltjes weights.
    pub fn alpha(&self, i: usize) -> Result<Coeff> {
        match &self.kind {
            WeightKind::Stieltjes { alphas } if i >= 1 => pick(alphas, i - 1, "alpha", i).cloned(),
            WeightKind::Stieltjes { .. } => Err(Error::IndexOutOfRange("alpha_0".into())),
            _ => Err(Error::BadParams("Stieltjes weights required".into())),
        }
    }

    /// `beta_i` of the equivalent Jacobi weights (`a_{i-1} b_i` for general weights).
    pub fn beta(&self, i: usize) -> Result<Coeff> {
        match &self.kind {
            WeightKind::Jacobi { .. } => self.fall(i),
            WeightKind::General { .. } => Ok(&self.rise(i - 1)? * &self.fall(i)?),
            WeightKind::Stieltjes { .. } => Err(Error::BadParams("Jacobi or general weights required".into())),
        }
    }

    /// `gamma_i` of the equivalent Jacobi weights.
    pub fn gamma(&self, i: usize) -> Result<Coeff> {
        match &self.kind {
            WeightKind::Stieltjes { .. } => Err(Error::BadParams("Jacobi or general weights required".into())),
            _ => self.level(i),
        }
    }
}

/// Product of the step weights along `steps` from height `start`.
pub fn path_weight(w: &PathWeights, start: usize, steps: &[Step]) -> Result<Coeff> {
    let mut h = start;
    let mut acc = Coeff::one(w.domain());
    for s in steps {
        let f = match s {
            Step::Rise => {
                h += 1;
                w.rise(h - 1)?
            }
            Step::Level => w.level(h)?,
            Step::Fall => {
                if h == 0 {
                    return Err(Error::BadParams("path goes below height 0".into()));
                }
                h -= 1;
                w.fall(h + 1)?
            }
        };
        acc = &acc * &f;
    }
    Ok(acc)
}

/// Sum of the weights of all `n`-step paths from height `k` to height `l`
/// staying at height `≥ min(k, l)`, by exhaustive search.
pub fn enumerate_weighted_paths(w: &PathWeights, n: usize, k: usize, l: usize, mode: PathMode) -> Result<Coeff> {
    if n > mode.enumeration_limit() {
        return Err(Error::SizeLimit { size: n, limit: mode.enumeration_limit() });
    }
    let mut total = Coeff::zero(w.domain());
    let floor = k.min(l);
    walk(w, mode, floor, l, k, n, Coeff::one(w.domain()), &mut total)?;
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    w: &PathWeights,
    mode: PathMode,
    floor: usize,
    target: usize,
    h: usize,
    left: usize,
    prod: Coeff,
    total: &mut Coeff,
) -> Result<()> {
    if left == 0 {
        if h == target {
            *total = &*total + &prod;
        }
        return Ok(());
    }
    let ok = |to: usize| to.abs_diff(target) < left;
    if ok(h + 1) {
        walk(w, mode, floor, target, h + 1, left - 1, &prod * &w.rise(h)?, total)?;
    }
    if mode == PathMode::Motzkin && ok(h) {
        walk(w, mode, floor, target, h, left - 1, &prod * &w.level(h)?, total)?;
    }
    if h > floor && ok(h - 1) {
        walk(w, mode, floor, target, h - 1, left - 1, &prod * &w.fall(h)?, total)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_motzkin_and_dyck_counts() {
        let q = Domain::Rational;
        let one = |_| Coeff::one(&q);
        let j = PathWeights::jacobi_from_fn(&q, 10, one, one).unwrap();
        let m: Vec<_> = (0..7).map(|n| enumerate_weighted_paths(&j, n, 0, 0, PathMode::Motzkin).unwrap()).collect();
        let want: Vec<_> = [1, 1, 2, 4, 9, 21, 51].iter().map(|&v| Coeff::from_int(&q, v)).collect();
        assert_eq!(m, want);
        let s = PathWeights::stieltjes_from_fn(&q, 10, one).unwrap();
        let d: Vec<_> = (0..6).map(|n| enumerate_weighted_paths(&s, 2 * n, 0, 0, PathMode::Dyck).unwrap()).collect();
        let want: Vec<_> = [1, 1, 2, 5, 14, 42].iter().map(|&v| Coeff::from_int(&q, v)).collect();
        assert_eq!(d, want);
        assert_eq!(enumerate_weighted_paths(&s, 3, 0, 0, PathMode::Dyck).unwrap(), Coeff::zero(&q));
    }

    #[test]
    fn floor_is_min_of_endpoints() {
        let q = Domain::Rational;
        let one = |_| Coeff::one(&q);
        let j = PathWeights::jacobi_from_fn(&q, 10, one, one).unwrap();
        // 2 -> 1 in one step: only the fall.
        assert_eq!(enumerate_weighted_paths(&j, 1, 2, 1, PathMode::Motzkin).unwrap(), Coeff::one(&q));
        // 1 -> 1 in two steps may not touch 0: LL, UD.
        assert_eq!(enumerate_weighted_paths(&j, 2, 1, 1, PathMode::Motzkin).unwrap(), Coeff::from_int(&q, 2));
        assert!(matches!(
            enumerate_weighted_paths(&j, 15, 0, 0, PathMode::Motzkin),
            Err(Error::SizeLimit { size: 15, limit: 14 })
        ));
    }
}
