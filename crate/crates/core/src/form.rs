//! Nondegenerate bilinear forms, the adjoint anti-involution they induce and
//! membership tests for the associated Lie algebras and isometry groups.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormKind {
    Symmetric,
    Alternating,
}

/// The acting group of a stability problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    GL,
    Sp,
    SO,
}

impl Group {
    pub fn name(&self) -> &'static str {
        match self {
            Group::GL => "GL",
            Group::Sp => "Sp",
            Group::SO => "SO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilForm<F> {
    kind: FormKind,
    gram: Mat<F>,
}

impl<F: Field> BilForm<F> {
    /// Validates symmetry (or skewness) and invertibility of the Gram matrix.
    pub fn new(kind: FormKind, gram: Mat<F>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Form("Gram matrix must be square".into()));
        }
        let t = gram.transpose();
        let ok = match kind {
            FormKind::Symmetric => t == gram,
            FormKind::Alternating => t == gram.neg() && gram.diagonal().iter().all(|d| d.is_zero()),
        };
        if !ok {
            return Err(Error::Form(format!("Gram matrix is not {:?}", kind).to_lowercase()));
        }
        if gram.det()?.is_zero() {
            return Err(Error::Form("degenerate Gram matrix".into()));
        }
        Ok(BilForm { kind, gram })
    }

    /// `[[0, -I], [I, 0]]` on `2n` variables.
    pub fn standard_symplectic(n: usize) -> Self {
        let i = Mat::identity(n);
        let z = Mat::zeros(n, n);
        let gram = Mat::block2(&z, &i.neg(), &i, &z).expect("square blocks");
        BilForm { kind: FormKind::Alternating, gram }
    }

    /// `[[0, I], [I, 0]]` on `2n` variables.
    pub fn split_symmetric(n: usize) -> Self {
        let i = Mat::identity(n);
        let z = Mat::zeros(n, n);
        let gram = Mat::block2(&z, &i, &i, &z).expect("square blocks");
        BilForm { kind: FormKind::Symmetric, gram }
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn gram(&self) -> &Mat<F> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    fn check_square(&self, f: &Mat<F>) -> Result<()> {
        if !f.is_square() || f.rows() != self.dim() {
            return Err(Error::Shape(format!(
                "{}x{} endomorphism against form of size {}",
                f.rows(),
                f.cols(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `B(v, w) = v^T G w`.
    pub fn eval(&self, v: &[F], w: &[F]) -> Result<F> {
        if v.len() != self.dim() || w.len() != self.dim() {
            return Err(Error::Shape("vector length does not match form".into()));
        }
        let gw = self.gram.mul_vec(w)?;
        Ok(v.iter().zip(&gw).fold(
            F::zero(),
            |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(b))
                }
            },
        ))
    }

    /// The adjoint `r(f) = G^{-1} f^T G`, characterised by `B(r(f) v, w) = B(v, f w)`.
    pub fn adjoint(&self, f: &Mat<F>) -> Result<Mat<F>> {
        self.check_square(f)?;
        self.gram.inverse()?.mul(&f.transpose())?.mul(&self.gram)
    }

    /// Whether `f` lies in the Lie algebra of the isometry group: `r(f) = -f`.
    pub fn lie_member(&self, f: &Mat<F>) -> Result<bool> {
        self.check_square(f)?;
        // f^T G + G f = 0 is equivalent and avoids the inverse
        let lhs = f.transpose().mul(&self.gram)?.add(&self.gram.mul(f)?)?;
        Ok(lhs.is_zero())
    }

    /// Whether `g^T G g = G`, additionally requiring `det g = 1` when `special`.
    pub fn group_member(&self, g: &Mat<F>, special: bool) -> Result<bool> {
        self.check_square(g)?;
        if g.transpose().mul(&self.gram)?.mul(g)? != self.gram {
            return Ok(false);
        }
        Ok(!special || g.det()?.is_one())
    }

    /// Whether `g^T G g = c G` for some scalar `c`, returned when it exists.
    pub fn similitude_factor(&self, g: &Mat<F>) -> Result<Option<F>> {
        self.check_square(g)?;
        let h = g.transpose().mul(&self.gram)?.mul(g)?;
        let (i, j) = (0..self.dim())
            .flat_map(|i| (0..self.dim()).map(move |j| (i, j)))
            .find(|&(i, j)| !self.gram.get(i, j).is_zero())
            .expect("nondegenerate form has a nonzero entry");
        let c = h.get(i, j).div(self.gram.get(i, j))?;
        Ok((h == self.gram.scale(&c)).then_some(c))
    }

    /// Whether the span of `basis` is totally isotropic; checking basis pairs suffices.
    pub fn is_totally_isotropic(&self, basis: &[Vec<F>]) -> Result<bool> {
        for (i, v) in basis.iter().enumerate() {
            for w in &basis[i..] {
                if !self.eval(v, w)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A random element of the Lie algebra: `G^{-1} S` with `S` symmetric for
    /// alternating forms and skew for symmetric ones.
    pub fn lie_element_from(&self, s: &Mat<F>) -> Result<Mat<F>> {
        self.check_square(s)?;
        let t = s.transpose();
        let shaped = match self.kind {
            FormKind::Alternating => s.add(&t)?,
            FormKind::Symmetric => s.sub(&t)?,
        };
        self.gram.inverse()?.mul(&shaped)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BilForm<G> {
        BilForm { kind: self.kind, gram: self.gram.map(f) }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<BilForm<G>> {
        Ok(BilForm { kind: self.kind, gram: self.gram.try_map(f)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type M = Mat<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn standard_grams() {
        let j = BilForm::<Rational>::standard_symplectic(1);
        assert_eq!(j.eval(&[q(1), q(0)], &[q(0), q(1)]).unwrap(), q(-1));
        let s = BilForm::<Rational>::split_symmetric(2);
        assert_eq!(s.eval(&[q(1), q(0), q(0), q(0)], &[q(0), q(0), q(1), q(0)]).unwrap(), q(1));
        assert!(BilForm::new(FormKind::Symmetric, M::zeros(2, 2)).is_err());
        assert!(BilForm::new(FormKind::Alternating, M::identity(2)).is_err());
    }

    #[test]
    fn identity_is_self_adjoint_and_not_lie() {
        for form in [BilForm::<Rational>::standard_symplectic(2), BilForm::split_symmetric(2)] {
            let i = M::identity(4);
            assert_eq!(form.adjoint(&i).unwrap(), i);
            assert!(!form.lie_member(&i).unwrap());
            assert!(form.group_member(&i, true).unwrap());
        }
    }

    #[test]
    fn group_examples() {
        let j = BilForm::<Rational>::standard_symplectic(1);
        let g = M::diag(&[q(2), Rational::new(1, 2).unwrap()]);
        assert!(j.group_member(&g, false).unwrap());
        let s = BilForm::<Rational>::split_symmetric(2);
        assert!(s.group_member(&M::identity(4).neg(), true).unwrap());
        // a reflection lies in O but not SO
        let r = M::from_rows(vec![
            vec![q(0), q(0), q(1), q(0)],
            vec![q(0), q(1), q(0), q(0)],
            vec![q(1), q(0), q(0), q(0)],
            vec![q(0), q(0), q(0), q(1)],
        ])
        .unwrap();
        assert!(s.group_member(&r, false).unwrap());
        assert!(!s.group_member(&r, true).unwrap());
    }

    #[test]
    fn shape_mismatch() {
        let j = BilForm::<Rational>::standard_symplectic(1);
        assert!(matches!(j.adjoint(&M::identity(3)), Err(Error::Shape(_))));
        assert!(matches!(j.eval(&[q(1)], &[q(1), q(0)]), Err(Error::Shape(_))));
    }
}
