use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::{BilForm, Group};
use crate::matrix::{EchelonBasis, Mat};

use super::{ModTuple, Subspace};

/// Weights of a diagonal one-parameter subgroup `t -> diag(t^r_1, ..., t^r_n)`.
///
/// Unpaired weights are nonincreasing. Paired weights (for `Sp`/`SO`) have
/// even length `2m`, a nonincreasing first half and `r_{i+m} = -r_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OPS {
    weights: Vec<i64>,
    paired: bool,
}

impl OPS {
    pub fn new(weights: Vec<i64>, paired: bool) -> Result<Self> {
        let sorted = |w: &[i64]| w.windows(2).all(|p| p[0] >= p[1]);
        if paired {
            let m = weights.len() / 2;
            if !weights.len().is_multiple_of(2) {
                return Err(Error::InvalidFlag("paired weights need even length".into()));
            }
            if !sorted(&weights[..m]) || (0..m).any(|i| weights[i + m] != -weights[i]) {
                return Err(Error::InvalidFlag("weights violate r_{i+m} = -r_i".into()));
            }
        } else if !sorted(&weights) {
            return Err(Error::InvalidFlag("weights must be nonincreasing".into()));
        }
        Ok(OPS { weights, paired })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn paired(&self) -> bool {
        self.paired
    }

    pub fn scaled(&self, c: i64) -> Result<Self> {
        if c <= 0 {
            return Err(Error::InvalidFlag("scale must be positive".into()));
        }
        OPS::new(self.weights.iter().map(|w| w * c).collect(), self.paired)
    }

    /// `lambda(t)` in the adapted coordinates, at an integer value of `t`.
    pub fn at<F: Field>(&self, t: i64) -> Result<Mat<F>> {
        let t = F::from_int(t);
        let entries = self
            .weights
            .iter()
            .map(|&w| {
                let mut acc = F::one();
                for _ in 0..w.unsigned_abs() {
                    acc = acc.mul(&t);
                }
                if w < 0 {
                    acc.inv()
                } else {
                    Ok(acc)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::diag(&entries))
    }
}

/// `mu(x, lambda) = -min` over the weights `r_i - r_j` of the nonzero entries
/// `(i, j)` of the generators. The zero tuple has `mu = 0`.
pub fn mu<F: Field>(t: &ModTuple<F>, ops: &OPS) -> Result<i64> {
    let r = ops.weights();
    if r.len() != t.n() {
        return Err(Error::Shape(format!("{} weights for a tuple of size {}", r.len(), t.n())));
    }
    let mut min: Option<i64> = None;
    for m in t.mats() {
        for i in 0..t.n() {
            for j in 0..t.n() {
                if !m.get(i, j).is_zero() {
                    let w = r[i] - r[j];
                    min = Some(min.map_or(w, |v| v.min(w)));
                }
            }
        }
    }
    Ok(min.map_or(0, |v| -v))
}

/// A basis adapted to a flag together with the weights of the destabilizing
/// subgroup in that basis: `lambda(t) = P diag(t^r) P^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedFlag<F> {
    pub basis: Mat<F>,
    pub ops: OPS,
}

impl<F: Field> AdaptedFlag<F> {
    /// `lambda(t)` in the original coordinates.
    pub fn subgroup_at(&self, t: i64) -> Result<Mat<F>> {
        self.basis.mul(&self.ops.at(t)?)?.mul(&self.basis.inverse()?)
    }
}

fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut e = vec![F::zero(); n];
    e[i] = F::one();
    e
}

/// One-parameter subgroup attached to the flag `0 < W < V`.
///
/// For `GL` the basis is `W` followed by standard complement vectors, with
/// weights `(1, ..., 1, -1, ..., -1)`. For `Sp`/`SO`, `W` must be totally
/// isotropic; the basis is `W`, half of a basis of `(W + U)^perp`, a dual
/// partner `U` of `W`, then the other half, with paired weights
/// `(1^k, 0^{m-k}, -1^k, 0^{m-k})`. The subgroup acts by `t` on `W`, by `1`
/// on the complement and by `t^{-1}` on `U`, so it preserves the form.
pub fn ops_from_flag<F: Field>(w: &Subspace<F>, group: Group, form: Option<&BilForm<F>>) -> Result<AdaptedFlag<F>> {
    let n = w.ambient();
    let k = w.dim();
    if !w.is_proper() {
        return Err(Error::InvalidFlag("subspace is not proper".into()));
    }
    let wv = w.vectors();
    match group {
        Group::GL => {
            let mut e = w.echelon();
            let mut cols = wv;
            for i in 0..n {
                let v = unit::<F>(n, i);
                if e.insert(&v) {
                    cols.push(v);
                }
            }
            let weights = (0..n).map(|i| if i < k { 1 } else { -1 }).collect();
            Ok(AdaptedFlag { basis: Mat::from_columns(&cols)?, ops: OPS::new(weights, false)? })
        }
        Group::Sp | Group::SO => {
            let form = form.ok_or_else(|| Error::InvalidFlag("isotropic flag needs a form".into()))?;
            if form.dim() != n {
                return Err(Error::Shape("form size does not match subspace".into()));
            }
            if !form.is_totally_isotropic(&wv)? {
                return Err(Error::InvalidFlag("subspace is not totally isotropic".into()));
            }
            let m = n / 2;
            let g = form.gram();
            // linear functionals v -> B(a, v) are the rows a^T G
            let functional = |a: &[F]| -> Result<Vec<F>> { g.transpose().mul_vec(a) };
            let mut partners: Vec<Vec<F>> = Vec::with_capacity(k);
            for i in 0..k {
                let mut rows = Vec::new();
                let mut rhs = Vec::new();
                for (j, wj) in wv.iter().enumerate() {
                    rows.push(functional(wj)?);
                    rhs.push(if i == j { F::one() } else { F::zero() });
                }
                for uj in &partners {
                    rows.push(functional(uj)?);
                    rhs.push(F::zero());
                }
                let sys = Mat::from_rows(rows)?;
                let mut u = sys
                    .solve(&rhs)?
                    .ok_or_else(|| Error::InvalidFlag("no dual partner; form degenerate on flag".into()))?;
                let buu = form.eval(&u, &u)?;
                if !buu.is_zero() {
                    // symmetric case: B(u - c w_i, u - c w_i) = B(u,u) - 2c
                    let c = buu.div(&F::from_int(2))?;
                    u = u.iter().zip(&wv[i]).map(|(a, b)| a.sub(&c.mul(b))).collect();
                }
                partners.push(u);
            }
            let mut rows = Vec::new();
            for a in wv.iter().chain(&partners) {
                rows.push(functional(a)?);
            }
            let complement = if rows.is_empty() {
                (0..n).map(|i| unit::<F>(n, i)).collect()
            } else {
                let mut e = EchelonBasis::new(n);
                for v in Mat::from_rows(rows)?.kernel() {
                    e.insert(&v);
                }
                e.vectors()
            };
            if complement.len() != n - 2 * k {
                return Err(Error::InvalidFlag("unexpected complement dimension".into()));
            }
            let half = m - k;
            let mut cols = wv.clone();
            cols.extend(complement[..half].iter().cloned());
            cols.extend(partners);
            cols.extend(complement[half..].iter().cloned());
            let mut weights = vec![0i64; n];
            for i in 0..k {
                weights[i] = 1;
                weights[m + i] = -1;
            }
            Ok(AdaptedFlag { basis: Mat::from_columns(&cols)?, ops: OPS::new(weights, true)? })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn mu_examples() {
        let e21 = Mat::from_rows(vec![vec![q(0), q(0)], vec![q(1), q(0)]]).unwrap();
        let t = ModTuple::new(2, vec![e21], None).unwrap();
        assert_eq!(mu(&t, &OPS::new(vec![1, -1], false).unwrap()).unwrap(), 2);
        assert_eq!(mu(&t, &OPS::new(vec![0, 0], false).unwrap()).unwrap(), 0);
        let z = ModTuple::<Q>::zero(2, 1, None).unwrap();
        assert_eq!(mu(&z, &OPS::new(vec![3, -3], false).unwrap()).unwrap(), 0);
    }

    #[test]
    fn gl_flag() {
        let w = Subspace::span(2, &[vec![q(1), q(0)]]).unwrap();
        let f = ops_from_flag(&w, Group::GL, None).unwrap();
        assert_eq!(f.ops.weights(), &[1, -1]);
        let e12 = Mat::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        let t = ModTuple::new(2, vec![e12], None).unwrap();
        assert_eq!(mu(&t.conjugate_by(&f.basis).unwrap(), &f.ops).unwrap(), -2);
    }

    #[test]
    fn symplectic_flag_is_paired_and_in_group() {
        let form = BilForm::<Q>::standard_symplectic(1);
        let w = Subspace::span(2, &[vec![q(1), q(0)]]).unwrap();
        let f = ops_from_flag(&w, Group::Sp, Some(&form)).unwrap();
        assert_eq!(f.ops.weights(), &[1, -1]);
        assert!(f.ops.paired());
        assert!(form.group_member(&f.subgroup_at(2).unwrap(), true).unwrap());
    }

    #[test]
    fn invalid_flags() {
        let form = BilForm::<Q>::split_symmetric(2);
        let full = Subspace::span(2, &[vec![q(1), q(0)], vec![q(0), q(1)]]).unwrap();
        assert!(matches!(ops_from_flag(&full, Group::GL, None), Err(Error::InvalidFlag(_))));
        let nonisotropic = Subspace::span(4, &[vec![q(1), q(0), q(1), q(0)]]).unwrap();
        assert!(matches!(ops_from_flag(&nonisotropic, Group::SO, Some(&form)), Err(Error::InvalidFlag(_))));
        assert!(OPS::new(vec![1, 2], false).is_err());
        assert!(OPS::new(vec![1, 0, 1, 0], true).is_err());
    }
}
