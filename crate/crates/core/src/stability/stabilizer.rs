use crate::error::Result;
use crate::field::Field;
use crate::form::Group;
use crate::matrix::Mat;

use super::ModTuple;

/// Basis of `{M : M x_i = x_i M for all i}`, solved as a linear system in
/// the `n^2` entries of `M`.
pub fn commutant<F: Field>(t: &ModTuple<F>) -> Result<Vec<Mat<F>>> {
    let n = t.n();
    let nn = n * n;
    let mut cols: Vec<Vec<F>> = Vec::with_capacity(nn);
    for a in 0..n {
        for b in 0..n {
            let e = Mat::<F>::unit(n, a, b);
            let mut col = Vec::with_capacity(t.g() * nn);
            for x in t.mats() {
                col.extend(e.commutator(x)?.to_vec());
            }
            cols.push(col);
        }
    }
    let sys = Mat::from_columns(&cols)?;
    sys.kernel().into_iter().map(|v| Mat::from_vec(n, n, v)).collect()
}

/// Stabilizer of a tuple in its group, described through the commutant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilizer<F> {
    pub group: Group,
    pub commutant_dim: usize,
    /// Commutant is the scalars, so the stabilizer is central.
    pub central: bool,
    /// Group elements found inside the commutant (isometries of the form, any determinant).
    pub elements: Vec<Mat<F>>,
    /// How many of `elements` have determinant one.
    pub special_count: usize,
    /// Whether `elements` is the whole stabilizer rather than a sample.
    pub exhaustive: bool,
}

impl<F: Field> Stabilizer<F> {
    /// Exactly `{I, -I}` (for `Sp`/`SO`), i.e. trivial in the adjoint group.
    pub fn is_plus_minus_identity(&self) -> bool {
        if self.group == Group::GL || !self.central || !self.exhaustive {
            return false;
        }
        let n = self.elements.first().map(|m| m.rows()).unwrap_or(0);
        let id = Mat::<F>::identity(n.max(1));
        self.elements.len() == 2 && self.elements.contains(&id) && self.elements.contains(&id.neg())
    }

    /// Contained in `{I, -I}` (for `Sp`/`SO`) or in the scalars (for `GL`).
    pub fn within_center(&self) -> bool {
        if self.central {
            return true;
        }
        if self.group == Group::GL || !self.exhaustive {
            return false;
        }
        self.elements.iter().all(|g| {
            let id = Mat::<F>::identity(g.rows());
            *g == id || *g == id.neg()
        })
    }

    pub fn describe(&self) -> String {
        if self.central {
            return match self.group {
                Group::GL => "scalars (trivial in PGL)".to_string(),
                _ if self.is_plus_minus_identity() => "{+I, -I}".to_string(),
                _ => format!("{} central elements", self.elements.len()),
            };
        }
        format!(
            "commutant of dimension {}; {}{} group elements found ({} with det 1)",
            self.commutant_dim,
            if self.exhaustive { "" } else { "at least " },
            self.elements.len(),
            self.special_count
        )
    }
}

/// Cap on commutant elements visited when listing a non-central stabilizer.
const ELEMENT_SEARCH_BUDGET: u128 = 1_000_000;

fn coefficient_grid<F: Field>(coeffs: &[F], dim: usize) -> Option<Vec<Vec<F>>> {
    let total = (coeffs.len() as u128).checked_pow(dim as u32)?;
    if total > ELEMENT_SEARCH_BUDGET {
        return None;
    }
    let mut out = Vec::with_capacity(total as usize);
    for mut idx in 0..total {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(coeffs[(idx % coeffs.len() as u128) as usize].clone());
            idx /= coeffs.len() as u128;
        }
        out.push(v);
    }
    Some(out)
}

/// Stabilizer of `t` under conjugation by `group`.
///
/// When the commutant is the scalars the answer is exact: all scalars for
/// `GL`, and `{cI : c^2 = 1}` for `Sp`/`SO`. Otherwise the commutant is
/// searched for isometries: exhaustively over finite fields, and over the
/// coefficient set `{-1, 0, 1}` in the commutant basis for infinite fields.
pub fn stabilizer_in_group<F: Field>(t: &ModTuple<F>, group: Group) -> Result<Stabilizer<F>> {
    let basis = commutant(t)?;
    let n = t.n();
    let dim = basis.len();
    let central = dim == 1;
    if group == Group::GL {
        return Ok(Stabilizer {
            group,
            commutant_dim: dim,
            central,
            elements: Vec::new(),
            special_count: 0,
            exhaustive: false,
        });
    }
    let form =
        t.form().ok_or_else(|| crate::error::Error::Form(format!("{} stabilizer needs a form", group.name())))?;
    if central {
        let id = Mat::<F>::identity(n);
        let mut elements = vec![id.clone()];
        if F::characteristic() != 2 {
            elements.push(id.neg());
        }
        let special_count = elements.iter().filter(|g| g.det().map(|d| d.is_one()).unwrap_or(false)).count();
        return Ok(Stabilizer { group, commutant_dim: 1, central, elements, special_count, exhaustive: true });
    }
    let (coeffs, exhaustive) = match F::all_elements() {
        Some(all) => (all, true),
        None => (vec![F::from_int(-1), F::zero(), F::one()], false),
    };
    let grid = coefficient_grid(&coeffs, dim);
    let exhaustive = exhaustive && grid.is_some();
    let mut elements = Vec::new();
    for c in grid.unwrap_or_default() {
        let mut g = Mat::<F>::zeros(n, n);
        for (ci, b) in c.iter().zip(&basis) {
            if !ci.is_zero() {
                g = g.add(&b.scale(ci))?;
            }
        }
        if form.group_member(&g, false)? {
            elements.push(g);
        }
    }
    let special_count = elements.iter().filter(|g| g.det().map(|d| d.is_one()).unwrap_or(false)).count();
    Ok(Stabilizer { group, commutant_dim: dim, central, elements, special_count, exhaustive })
}
