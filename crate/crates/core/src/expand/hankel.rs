use crate::coeffs::Coeff;
use crate::error::{Error, Result};

/// J-fraction data recovered from a Hankel matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelJFraction {
    pub gammas: Vec<Coeff>,
    pub betas: Vec<Coeff>,
    pub d0: Coeff,
    /// Unit lower triangular factor, row `i` holds `L_{i,0..=i}`.
    pub l: Vec<Vec<Coeff>>,
    /// Diagonal factor.
    pub d: Vec<Coeff>,
}

/// Recovers `gamma_0..gamma_{m-1}`, `beta_1..beta_m` from `a_0..a_{2m}` by
/// exact symmetric elimination `L D L^T = (a_{i+j})`: `beta_k = d_k / d_{k-1}`
/// and `gamma_k = L_{k+1,k} - L_{k,k-1}`.
///
/// A vanishing pivot means no J-fraction of this depth exists.
pub fn jfraction_from_hankel(a: &[Coeff]) -> Result<HankelJFraction> {
    if a.is_empty() {
        return Err(Error::BadParams("empty sequence".into()));
    }
    let m = (a.len() - 1) / 2;
    let dom = a[0].domain();
    let mut l: Vec<Vec<Coeff>> = (0..=m).map(|i| vec![Coeff::zero(&dom); i + 1]).collect();
    let mut d: Vec<Coeff> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        // ld[k] = L_{j,k} d_k
        let ld: Vec<Coeff> = (0..j).map(|k| &l[j][k] * &d[k]).collect();
        let mut dj = a[2 * j].clone();
        for (k, v) in ld.iter().enumerate() {
            dj.sub_mul_assign(&l[j][k], v);
        }
        if dj.is_zero() {
            return Err(Error::SingularPivot { index: j });
        }
        l[j][j] = Coeff::one(&dom);
        for i in j + 1..=m {
            let mut s = a[i + j].clone();
            for (k, v) in ld.iter().enumerate() {
                s.sub_mul_assign(&l[i][k], v);
            }
            l[i][j] = s.exact_div(&dj)?;
        }
        d.push(dj);
    }
    let betas = (1..=m).map(|k| d[k].exact_div(&d[k - 1])).collect::<Result<Vec<_>>>()?;
    let gammas = (0..m)
        .map(|k| if k == 0 { l[1][0].clone() } else { &l[k + 1][k] - &l[k][k - 1] })
        .collect();
    Ok(HankelJFraction { gammas, betas, d0: d[0].clone(), l, d })
}
