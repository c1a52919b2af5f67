//! Matrix tuples as modules over the free algebra, and their stability under
//! conjugation by `GL`, `Sp` or `SO`.
//!
//! Stability is decided through invariant subspaces: a tuple is `GL`-stable iff
//! the module it defines is (absolutely) simple, and `Sp`/`SO`-stable iff it
//! has no nonzero totally isotropic submodule. Each criterion is paired with a
//! one-parameter-subgroup certificate whose weight `mu` is non-positive.

mod invariant;
mod stabilizer;
mod subspace;
mod tuple;
mod weights;

pub use invariant::{
    enumerate_invariant_subspaces_ff, enumerate_invariant_subspaces_with, find_isotropic_submodule,
    generated_algebra_dim, invariant_subspaces_distinct, spin, DEFAULT_SUBSPACE_BUDGET,
};
pub use stabilizer::{commutant, stabilizer_in_group, Stabilizer};
pub use subspace::{count_proper_subspaces, Subspace, SubspaceEnumerator};
pub use tuple::ModTuple;
pub use weights::{mu, ops_from_flag, AdaptedFlag, OPS};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::Field;
use crate::form::{FormKind, Group};
use crate::matrix::Mat;

/// How invariant subspaces are detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Dimension of the generated algebra (absolute simplicity; `GL` only).
    Burnside,
    /// Spans of eigenvector subsets of the first generator.
    Eigen,
    /// Exhaustive subspace enumeration over a finite field.
    Enumerate,
}

/// Destabilizing data attached to an unstable verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<F> {
    pub subspace: Subspace<F>,
    pub flag: AdaptedFlag<F>,
    pub mu: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<F> {
    pub stable: bool,
    pub certificate: Option<Certificate<F>>,
    pub method: Method,
    pub note: Option<String>,
}

fn certify<F: Field>(t: &ModTuple<F>, w: Subspace<F>, group: Group) -> Result<Certificate<F>> {
    let flag = ops_from_flag(&w, group, t.form())?;
    let conj = t.conjugate_by(&flag.basis)?;
    let m = mu(&conj, &flag.ops)?;
    Ok(Certificate { subspace: w, flag, mu: m })
}

fn check_group_form<F: Field>(t: &ModTuple<F>, group: Group) -> Result<()> {
    let want = match group {
        Group::GL => return Ok(()),
        Group::Sp => FormKind::Alternating,
        Group::SO => FormKind::Symmetric,
    };
    match t.form() {
        Some(f) if f.kind() == want => Ok(()),
        Some(_) => Err(Error::Form(format!("{} needs a {:?} form", group.name(), want).to_lowercase())),
        None => Err(Error::Form(format!("{} stability needs a bilinear form", group.name()))),
    }
}

/// Decides stability of `t` under `group` with the chosen detection method.
pub fn is_stable<F: Field>(
    t: &ModTuple<F>,
    group: Group,
    method: Method,
    budget: u128,
    exec: Exec,
) -> Result<Verdict<F>> {
    check_group_form(t, group)?;
    let mut note = None;
    let found = match (group, method) {
        (Group::GL, Method::Burnside) => {
            let n = t.n();
            if generated_algebra_dim(t)? == n * n {
                None
            } else {
                // the generated algebra is proper; look for a rational witness by spinning basis vectors
                let w = (0..n).find_map(|i| {
                    let mut e = vec![F::zero(); n];
                    e[i] = F::one();
                    spin(t, &e).ok().filter(|s| s.dim() < n)
                });
                if w.is_none() {
                    note = Some(
                        "generated algebra is proper (not absolutely simple); no rational submodule found by spinning"
                            .to_string(),
                    );
                    return Ok(Verdict { stable: false, certificate: None, method, note });
                }
                w
            }
        }
        (Group::GL, Method::Eigen) => invariant_subspaces_distinct(t)?.into_iter().next(),
        (Group::GL, Method::Enumerate) => {
            let elements = F::all_elements()
                .ok_or_else(|| Error::MethodNotApplicable("enumeration needs a finite field".into()))?;
            enumerate_invariant_subspaces_with(t, &elements, budget, exec)?.into_iter().next()
        }
        (_, Method::Burnside) => {
            return Err(Error::MethodNotApplicable(
                "the generated-algebra test does not see the form; use eigen or enumerate".into(),
            ))
        }
        (_, m) => {
            if group == Group::SO {
                note = Some("orthogonal case: isotropic-submodule criterion transported from the symplectic argument with the split symmetric form".to_string());
            }
            find_isotropic_submodule(t, m, budget, exec)?
        }
    };
    let certificate = found.map(|w| certify(t, w, group)).transpose()?;
    Ok(Verdict { stable: certificate.is_none(), certificate, method, note })
}

/// Conjugates every generator by `p`: `x_i -> p^{-1} x_i p`.
pub fn conjugate_mats<F: Field>(mats: &[Mat<F>], p: &Mat<F>) -> Result<Vec<Mat<F>>> {
    let inv = p.inverse()?;
    mats.iter().map(|m| inv.mul(m)?.mul(p)).collect()
}
