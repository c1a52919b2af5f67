use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, FiniteField};
use crate::matrix::{EchelonBasis, Mat};

use super::subspace::{count_proper_subspaces, Subspace, SubspaceEnumerator};
use super::{Method, ModTuple};

/// Default cap on the number of subspaces the exhaustive oracle may visit.
pub const DEFAULT_SUBSPACE_BUDGET: u128 = 1_000_000;

/// Smallest subspace containing `v` and closed under every generator.
pub fn spin<F: Field>(t: &ModTuple<F>, v: &[F]) -> Result<Subspace<F>> {
    if v.len() != t.n() {
        return Err(Error::Shape("vector length does not match tuple".into()));
    }
    if v.iter().all(|e| e.is_zero()) {
        return Err(Error::ZeroInput("spin of the zero vector"));
    }
    let mut basis = EchelonBasis::new(t.n());
    let mut queue = vec![v.to_vec()];
    basis.insert(v);
    while let Some(w) = queue.pop() {
        for m in t.mats() {
            let img = m.mul_vec(&w)?;
            if basis.insert(&img) {
                queue.push(img);
            }
        }
    }
    Subspace::from_echelon(&basis)
}

/// Dimension of the unital algebra generated by the tuple, by span closure.
pub fn generated_algebra_dim<F: Field>(t: &ModTuple<F>) -> Result<usize> {
    let n = t.n();
    let mut span = EchelonBasis::new(n * n);
    let id = Mat::<F>::identity(n);
    span.insert(&id.to_vec());
    let mut queue = vec![id];
    while let Some(w) = queue.pop() {
        for m in t.mats() {
            let p = m.mul(&w)?;
            if span.insert(&p.to_vec()) {
                if span.len() == n * n {
                    return Ok(n * n);
                }
                queue.push(p);
            }
        }
    }
    Ok(span.len())
}

/// Eigenvectors of `m` when it is diagonalizable with pairwise distinct
/// eigenvalues in `F`. Diagonal matrices are handled over any field; other
/// matrices only over finite fields, by scanning candidate eigenvalues.
fn distinct_eigenvectors<F: Field>(m: &Mat<F>) -> Result<Vec<Vec<F>>> {
    let n = m.rows();
    if m.is_diagonal() {
        let d = m.diagonal();
        for i in 0..n {
            for j in i + 1..n {
                if d[i] == d[j] {
                    return Err(Error::MethodNotApplicable(format!(
                        "repeated eigenvalue {} of the first generator; use the finite-field enumeration",
                        d[i]
                    )));
                }
            }
        }
        return Ok((0..n)
            .map(|i| {
                let mut e = vec![F::zero(); n];
                e[i] = F::one();
                e
            })
            .collect());
    }
    let elements = F::all_elements().ok_or_else(|| {
        Error::MethodNotApplicable(
            "eigenvalues of a non-diagonal generator are only computed over finite fields".into(),
        )
    })?;
    let mut vecs = Vec::new();
    for lambda in elements {
        let shifted = m.sub(&Mat::scalar(n, lambda.clone()))?;
        let ker = shifted.kernel();
        match ker.len() {
            0 => {}
            1 => vecs.push(ker.into_iter().next().expect("one kernel vector")),
            _ => {
                return Err(Error::MethodNotApplicable(format!(
                    "repeated eigenvalue {} of the first generator; use the finite-field enumeration",
                    lambda
                )))
            }
        }
    }
    if vecs.len() < n {
        return Err(Error::MethodNotApplicable(
            "first generator is not diagonalizable with distinct eigenvalues over the field; use the finite-field enumeration".into(),
        ));
    }
    Ok(vecs)
}

/// All nonzero proper invariant subspaces, using that every such subspace is
/// spanned by eigenvectors of the first generator when its eigenvalues are
/// distinct. Ordered by dimension, then subset bitmask.
pub fn invariant_subspaces_distinct<F: Field>(t: &ModTuple<F>) -> Result<Vec<Subspace<F>>> {
    let n = t.n();
    if n > 24 {
        return Err(Error::Budget { count: 1u128 << n, budget: 1 << 24 });
    }
    let eig = distinct_eigenvectors(&t.mats()[0])?;
    let mut found: Vec<(u32, u64, Subspace<F>)> = Vec::new();
    for mask in 1u64..(1u64 << n) - 1 {
        let vs: Vec<Vec<F>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| eig[i].clone()).collect();
        let s = Subspace::span(n, &vs)?;
        if s.is_invariant(&t.mats()[1..])? {
            found.push((mask.count_ones(), mask, s));
        }
    }
    found.sort_by_key(|(d, m, _)| (*d, *m));
    Ok(found.into_iter().map(|(_, _, s)| s).collect())
}

fn rows_invariant<F: Field>(rows: &[Vec<F>], pivots: &[usize], mats: &[Mat<F>]) -> bool {
    for m in mats {
        for r in rows {
            let mut w = m.mul_vec(r).expect("square generator");
            for (row, &p) in rows.iter().zip(pivots) {
                let f = w[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (a, b) in w.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.sub(&f.mul(b));
                    }
                }
            }
            if w.iter().any(|e| !e.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive oracle over an explicit finite element list.
pub fn enumerate_invariant_subspaces_with<F: Field>(
    t: &ModTuple<F>,
    elements: &[F],
    budget: u128,
    exec: Exec,
) -> Result<Vec<Subspace<F>>> {
    let count = count_proper_subspaces(t.n(), elements.len() as u64);
    if count > budget {
        return Err(Error::Budget { count, budget });
    }
    let en = SubspaceEnumerator::new(t.n(), elements.to_vec());
    let mats = t.mats();
    Ok(exec.filter_map_range(0..en.total() as u64, |i| {
        let rows = en.rows(i as u128);
        let pivots: Vec<usize> = rows.iter().map(|r| r.iter().position(|e| !e.is_zero()).expect("rref row")).collect();
        rows_invariant(&rows, &pivots, mats).then(|| en.subspace(i as u128))
    }))
}

/// Every nonzero proper invariant subspace of `F_q^n`, by enumerating all subspaces.
pub fn enumerate_invariant_subspaces_ff<F: FiniteField>(
    t: &ModTuple<F>,
    budget: u128,
    exec: Exec,
) -> Result<Vec<Subspace<F>>> {
    enumerate_invariant_subspaces_with(t, &F::elements(), budget, exec)
}

/// A nonzero invariant subspace on which the tuple's form vanishes, if any.
pub fn find_isotropic_submodule<F: Field>(
    t: &ModTuple<F>,
    method: Method,
    budget: u128,
    exec: Exec,
) -> Result<Option<Subspace<F>>> {
    let form = t.form().ok_or_else(|| Error::Form("isotropy needs a bilinear form".into()))?;
    let candidates = match method {
        Method::Eigen => invariant_subspaces_distinct(t)?,
        Method::Enumerate => {
            let elements = F::all_elements()
                .ok_or_else(|| Error::MethodNotApplicable("enumeration needs a finite field".into()))?;
            enumerate_invariant_subspaces_with(t, &elements, budget, exec)?
        }
        Method::Burnside => {
            return Err(Error::MethodNotApplicable("the generated-algebra test does not detect isotropy".into()))
        }
    };
    for s in candidates {
        if form.is_totally_isotropic(&s.vectors())? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
