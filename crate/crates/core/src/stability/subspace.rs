use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{EchelonBasis, Mat};

/// A nonzero subspace of `F^n`, held by the reduced column-echelon basis
/// matrix whose columns span it. Equal subspaces have equal bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    basis: Mat<F>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Result<Self> {
        let mut e = EchelonBasis::new(ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::Shape("vector length does not match ambient dimension".into()));
            }
            e.insert(v);
        }
        Self::from_echelon(&e)
    }

    pub fn from_echelon(e: &EchelonBasis<F>) -> Result<Self> {
        if e.is_empty() {
            return Err(Error::ZeroInput("zero subspace"));
        }
        Ok(Subspace { basis: Mat::from_columns(&e.vectors())? })
    }

    pub(crate) fn from_rref_rows(rows: &[Vec<F>]) -> Self {
        Subspace { basis: Mat::from_columns(rows).expect("nonempty rows") }
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_proper(&self) -> bool {
        self.dim() < self.ambient()
    }

    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        (0..self.dim()).map(|j| self.basis.col(j)).collect()
    }

    pub fn echelon(&self) -> EchelonBasis<F> {
        let mut e = EchelonBasis::new(self.ambient());
        for v in self.vectors() {
            e.insert(&v);
        }
        e
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.echelon().contains(v)
    }

    /// Whether every matrix maps the subspace into itself.
    pub fn is_invariant(&self, mats: &[Mat<F>]) -> Result<bool> {
        let e = self.echelon();
        for m in mats {
            for v in self.vectors() {
                if !e.contains(&m.mul_vec(&v)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Gaussian binomial `[n choose k]_q`, saturating.
fn gaussian_binomial(n: u32, k: u32, q: u128) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow(n - i).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow(i + 1).saturating_sub(1));
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Number of nonzero proper subspaces of `F_q^n`.
pub fn count_proper_subspaces(n: usize, q: u64) -> u128 {
    (1..n as u32).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n as u32, k, q as u128)))
}

/// Echelon cell: one pivot pattern, with the positions of its free entries.
struct Cell {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    offset: u128,
    size: u128,
}

/// Indexable stream of all nonzero proper subspaces of `F_q^n`, ordered by
/// dimension, then pivot pattern, then free entries (lexicographic).
pub struct SubspaceEnumerator<F> {
    n: usize,
    elements: Vec<F>,
    cells: Vec<Cell>,
    total: u128,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl<F: Field> SubspaceEnumerator<F> {
    pub fn new(n: usize, elements: Vec<F>) -> Self {
        let q = elements.len() as u128;
        let mut cells = Vec::new();
        let mut offset: u128 = 0;
        for k in 1..n {
            for pivots in combinations(n, k) {
                let mut free = Vec::new();
                for (r, &p) in pivots.iter().enumerate() {
                    for c in p + 1..n {
                        if !pivots.contains(&c) {
                            free.push((r, c));
                        }
                    }
                }
                let size = q.saturating_pow(free.len() as u32);
                cells.push(Cell { pivots, free, offset, size });
                offset = offset.saturating_add(size);
            }
        }
        SubspaceEnumerator { n, elements, cells, total: offset }
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    /// RREF rows of the subspace with the given index.
    pub fn rows(&self, index: u128) -> Vec<Vec<F>> {
        let ci = self.cells.partition_point(|c| c.offset + c.size <= index);
        let cell = &self.cells[ci];
        let mut local = index - cell.offset;
        let q = self.elements.len() as u128;
        let mut rows: Vec<Vec<F>> = cell
            .pivots
            .iter()
            .map(|&p| {
                let mut r = vec![F::zero(); self.n];
                r[p] = F::one();
                r
            })
            .collect();
        // last free slot varies fastest
        for &(r, c) in cell.free.iter().rev() {
            rows[r][c] = self.elements[(local % q) as usize].clone();
            local /= q;
        }
        rows
    }

    pub fn subspace(&self, index: u128) -> Subspace<F> {
        Subspace::from_rref_rows(&self.rows(index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Fp};

    #[test]
    fn counts_match_gaussian_binomials() {
        assert_eq!(count_proper_subspaces(2, 3), 4);
        assert_eq!(count_proper_subspaces(3, 2), 14);
        assert_eq!(count_proper_subspaces(4, 2), 15 + 35 + 15);
        let e = SubspaceEnumerator::new(4, Fp::<2>::elements());
        assert_eq!(e.total(), 65);
        let e = SubspaceEnumerator::new(3, Fp::<5>::elements());
        assert_eq!(e.total(), count_proper_subspaces(3, 5));
    }

    #[test]
    fn enumeration_is_distinct_and_canonical() {
        let e = SubspaceEnumerator::new(3, Fp::<3>::elements());
        let all: Vec<_> = (0..e.total()).map(|i| e.subspace(i)).collect();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for s in &all {
            assert_eq!(&Subspace::span(3, &s.vectors()).unwrap(), s);
        }
    }
}
