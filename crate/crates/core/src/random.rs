//! Seeded random generators for tuples, Lie algebra elements and group
//! elements, used by the randomized suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::{Field, FiniteField, Fp, Rational};
use crate::form::{BilForm, FormKind};
use crate::matrix::Mat;
use crate::stability::ModTuple;

/// Deterministic generator for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Elements that can be drawn at random.
pub trait Sample: Field {
    fn sample<R: Rng>(rng: &mut R) -> Self;
}

impl<const P: u32> Sample for Fp<P> {
    fn sample<R: Rng>(rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..P as i64))
    }
}

impl Sample for Rational {
    /// Small numerators and denominators.
    fn sample<R: Rng>(rng: &mut R) -> Self {
        Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=3)).expect("nonzero denominator")
    }
}

pub fn random_mat<F: Sample, R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Mat<F> {
    Mat::from_fn(rows, cols, |_, _| F::sample(rng))
}

pub fn random_invertible<F: Sample, R: Rng>(n: usize, rng: &mut R) -> Mat<F> {
    loop {
        let m: Mat<F> = random_mat(n, n, rng);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

pub fn random_tuple<F: Sample, R: Rng>(n: usize, g: usize, rng: &mut R) -> ModTuple<F> {
    let mats = (0..g).map(|_| random_mat(n, n, rng)).collect();
    ModTuple::new(n, mats, None).expect("well-shaped tuple")
}

pub fn random_lie<F: Sample, R: Rng>(form: &BilForm<F>, rng: &mut R) -> Mat<F> {
    let s = random_mat(form.dim(), form.dim(), rng);
    form.lie_element_from(&s).expect("square")
}

pub fn random_lie_tuple<F: Sample, R: Rng>(form: &BilForm<F>, g: usize, rng: &mut R) -> ModTuple<F> {
    let mats = (0..g).map(|_| random_lie(form, rng)).collect();
    ModTuple::new(form.dim(), mats, Some(form.clone())).expect("Lie elements")
}

/// A diagonalizable matrix with pairwise distinct eigenvalues drawn from the field.
pub fn random_distinct_diagonalizable<F: Sample + FiniteField, R: Rng>(n: usize, rng: &mut R) -> Result<Mat<F>> {
    let mut pool = F::elements();
    let mut eig = Vec::with_capacity(n);
    for _ in 0..n {
        let i = rng.gen_range(0..pool.len());
        eig.push(pool.swap_remove(i));
    }
    let p = random_invertible::<F, R>(n, rng);
    p.mul(&Mat::diag(&eig))?.mul(&p.inverse()?)
}

/// Random isometry of `form`: a product of symplectic transvections
/// `v -> v + c B(u, v) u`, or of an even number of reflections (so of
/// determinant one) for symmetric forms.
pub fn random_group_element<F: Sample, R: Rng>(form: &BilForm<F>, steps: usize, rng: &mut R) -> Result<Mat<F>> {
    let n = form.dim();
    let g = form.gram();
    let mut acc = Mat::<F>::identity(n);
    let mut done = 0;
    while done < steps {
        let u: Vec<F> = (0..n).map(|_| F::sample(rng)).collect();
        let ut_g = Mat::from_rows(vec![g.transpose().mul_vec(&u)?])?;
        let col = Mat::column(&u);
        let step = match form.kind() {
            FormKind::Alternating => {
                let c = F::sample(rng);
                Mat::identity(n).add(&col.mul(&ut_g)?.scale(&c))?
            }
            FormKind::Symmetric => {
                let b = form.eval(&u, &u)?;
                if b.is_zero() {
                    continue;
                }
                let f = F::from_int(2).div(&b)?;
                Mat::identity(n).sub(&col.mul(&ut_g)?.scale(&f))?
            }
        };
        acc = acc.mul(&step)?;
        done += 1;
    }
    if form.kind() == FormKind::Symmetric && steps % 2 == 1 {
        return random_group_element(form, steps + 1, rng);
    }
    Ok(acc)
}
