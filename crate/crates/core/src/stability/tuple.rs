use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::BilForm;
use crate::matrix::Mat;

/// A `g`-tuple of `n x n` matrices, optionally with a form whose Lie algebra
/// contains every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModTuple<F> {
    n: usize,
    mats: Vec<Mat<F>>,
    form: Option<BilForm<F>>,
}

impl<F: Field> ModTuple<F> {
    pub fn new(n: usize, mats: Vec<Mat<F>>, form: Option<BilForm<F>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        if mats.is_empty() {
            return Err(Error::Shape("a tuple needs at least one generator".into()));
        }
        for m in &mats {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Shape(format!("generator is {}x{}, expected {}x{}", m.rows(), m.cols(), n, n)));
            }
        }
        if let Some(f) = &form {
            if f.dim() != n {
                return Err(Error::Shape(format!("form of size {} on tuple of size {}", f.dim(), n)));
            }
            for (i, m) in mats.iter().enumerate() {
                if !f.lie_member(m)? {
                    return Err(Error::NotLie(i));
                }
            }
        }
        Ok(ModTuple { n, mats, form })
    }

    /// `g` zero matrices.
    pub fn zero(n: usize, g: usize, form: Option<BilForm<F>>) -> Result<Self> {
        Self::new(n, vec![Mat::zeros(n, n); g], form)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> usize {
        self.mats.len()
    }

    pub fn mats(&self) -> &[Mat<F>] {
        &self.mats
    }

    pub fn form(&self) -> Option<&BilForm<F>> {
        self.form.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    /// Change of basis by `p`: generators become `p^{-1} x p`, the Gram matrix `p^T G p`.
    pub fn conjugate_by(&self, p: &Mat<F>) -> Result<Self> {
        let mats = super::conjugate_mats(&self.mats, p)?;
        let form = match &self.form {
            Some(f) => Some(BilForm::new(f.kind(), p.transpose().mul(f.gram())?.mul(p)?)?),
            None => None,
        };
        Ok(ModTuple { n: self.n, mats, form })
    }

    /// Same tuple with the form dropped (the `GL` view).
    pub fn without_form(&self) -> Self {
        ModTuple { n: self.n, mats: self.mats.clone(), form: None }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> ModTuple<G> {
        ModTuple {
            n: self.n,
            mats: self.mats.iter().map(|m| m.map(f)).collect(),
            form: self.form.as_ref().map(|b| b.map(f)),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G> + Copy) -> Result<ModTuple<G>> {
        let mats = self.mats.iter().map(|m| m.try_map(f)).collect::<Result<Vec<_>>>()?;
        let form = self.form.as_ref().map(|b| b.try_map(f)).transpose()?;
        ModTuple::new(self.n, mats, form)
    }
}
