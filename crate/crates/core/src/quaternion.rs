//! The generic quaternion algebra `(x, y)` over `k(x, y)`: arithmetic in the
//! basis `1, a, b, ab`, its matrix model over `k(√x, y)`, twisted Galois
//! descent, and non-splitness via the x-adic residue.

use std::fmt;

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Rational};
use crate::matrix::{EchelonBasis, Mat};
use crate::poly::{Mono, Poly};
use crate::qext::QExt;
use crate::ratfunc::{is_square_geometric, RatF};

/// Element `c1 + ca*a + cb*b + cab*ab` with `a^2 = x`, `b^2 = y`, `ab = -ba`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quat<C> {
    pub c1: RatF<C>,
    pub ca: RatF<C>,
    pub cb: RatF<C>,
    pub cab: RatF<C>,
}

impl<C: Field> Quat<C> {
    pub fn new(c1: RatF<C>, ca: RatF<C>, cb: RatF<C>, cab: RatF<C>) -> Self {
        Quat { c1, ca, cb, cab }
    }

    pub fn zero() -> Self {
        Self::new(RatF::zero(), RatF::zero(), RatF::zero(), RatF::zero())
    }

    pub fn scalar(c: RatF<C>) -> Self {
        Self::new(c, RatF::zero(), RatF::zero(), RatF::zero())
    }

    pub fn one() -> Self {
        Self::scalar(RatF::one())
    }

    pub fn a() -> Self {
        Self::new(RatF::zero(), RatF::one(), RatF::zero(), RatF::zero())
    }

    pub fn b() -> Self {
        Self::new(RatF::zero(), RatF::zero(), RatF::one(), RatF::zero())
    }

    pub fn ab() -> Self {
        Self::new(RatF::zero(), RatF::zero(), RatF::zero(), RatF::one())
    }

    pub fn coords(&self) -> [&RatF<C>; 4] {
        [&self.c1, &self.ca, &self.cb, &self.cab]
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.c1.add(&o.c1), self.ca.add(&o.ca), self.cb.add(&o.cb), self.cab.add(&o.cab))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c1.neg(), self.ca.neg(), self.cb.neg(), self.cab.neg())
    }

    pub fn scale(&self, c: &RatF<C>) -> Self {
        Self::new(self.c1.mul(c), self.ca.mul(c), self.cb.mul(c), self.cab.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let x = RatF::<C>::x();
        let y = RatF::<C>::y();
        let xy = x.mul(&y);
        let (p1, pa, pb, pab) = (&self.c1, &self.ca, &self.cb, &self.cab);
        let (q1, qa, qb, qab) = (&o.c1, &o.ca, &o.cb, &o.cab);
        let c1 = p1.mul(q1).add(&x.mul(&pa.mul(qa))).add(&y.mul(&pb.mul(qb))).sub(&xy.mul(&pab.mul(qab)));
        let ca = p1.mul(qa).add(&pa.mul(q1)).sub(&y.mul(&pb.mul(qab))).add(&y.mul(&pab.mul(qb)));
        let cb = p1.mul(qb).add(&pb.mul(q1)).add(&x.mul(&pa.mul(qab))).sub(&x.mul(&pab.mul(qa)));
        let cab = p1.mul(qab).add(&pab.mul(q1)).add(&pa.mul(qb)).sub(&pb.mul(qa));
        Self::new(c1, ca, cb, cab)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.c1.clone(), self.ca.neg(), self.cb.neg(), self.cab.neg())
    }

    /// Reduced norm `c1^2 - x ca^2 - y cb^2 + x y cab^2`.
    pub fn norm(&self) -> RatF<C> {
        let x = RatF::<C>::x();
        let y = RatF::<C>::y();
        let sq = |c: &RatF<C>| c.mul(c);
        sq(&self.c1).sub(&x.mul(&sq(&self.ca))).sub(&y.mul(&sq(&self.cb))).add(&x.mul(&y).mul(&sq(&self.cab)))
    }

    /// Reduced trace `2 c1`.
    pub fn trace(&self) -> RatF<C> {
        self.c1.add(&self.c1)
    }
}

impl<C: Field> fmt::Display for Quat<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*a + ({})*b + ({})*ab", self.c1, self.ca, self.cb, self.cab)
    }
}

/// Image of `a`: `diag(√x, -√x)`.
pub fn image_a<C: Field>() -> Mat<QExt<C>> {
    Mat::diag(&[QExt::s(), QExt::s().neg()])
}

/// Image of `b`: `[[0, 1], [y, 0]]`.
pub fn image_b<C: Field>() -> Mat<QExt<C>> {
    Mat::from_rows(vec![vec![QExt::zero(), QExt::one()], vec![QExt::y(), QExt::zero()]]).expect("2x2")
}

/// The matrix model of the quaternion algebra inside `M_2(k(√x, y))`.
pub fn embed_m2k<C: Field>(q: &Quat<C>) -> Mat<QExt<C>> {
    let a = image_a::<C>();
    let b = image_b::<C>();
    let ab = a.mul(&b).expect("2x2");
    let lift = |c: &RatF<C>| QExt::from_base(c.clone());
    Mat::scalar(2, lift(&q.c1))
        .add(&a.scale(&lift(&q.ca)))
        .and_then(|m| m.add(&b.scale(&lift(&q.cb))))
        .and_then(|m| m.add(&ab.scale(&lift(&q.cab))))
        .expect("2x2")
}

/// The semilinear involution `M -> C M^σ C^{-1}` on square matrices over
/// `k(√x, y)`.
#[derive(Clone, Debug)]
pub struct TwistedAction<C> {
    c: Mat<QExt<C>>,
    c_inv: Mat<QExt<C>>,
}

impl<C: Field> TwistedAction<C> {
    /// Fails unless `C` is invertible with `C C^σ` scalar, which makes the action
    /// an involution.
    pub fn new(c: Mat<QExt<C>>) -> Result<Self> {
        if !c.is_square() {
            return Err(Error::Shape("twisting matrix must be square".into()));
        }
        let c_inv = c.inverse()?;
        let cc = c.mul(&c.sigma())?;
        let d = cc.get(0, 0).clone();
        if cc != Mat::scalar(c.rows(), d) {
            return Err(Error::Shape("twisting matrix does not give an involution".into()));
        }
        Ok(TwistedAction { c, c_inv })
    }

    /// The action with `C = [[0, 1], [y, 0]]`, whose fixed algebra is the
    /// quaternion algebra itself.
    pub fn standard() -> Self {
        Self::new(image_b()).expect("invertible")
    }

    pub fn matrix(&self) -> &Mat<QExt<C>> {
        &self.c
    }

    pub fn size(&self) -> usize {
        self.c.rows()
    }

    pub fn apply(&self, m: &Mat<QExt<C>>) -> Result<Mat<QExt<C>>> {
        if m.rows() != self.size() || m.cols() != self.size() {
            return Err(Error::Shape(format!("expected {0}x{0} matrix", self.size())));
        }
        self.c.mul(&m.sigma())?.mul(&self.c_inv)
    }
}

pub fn twisted_sigma<C: Field>(m: &Mat<QExt<C>>, action: &TwistedAction<C>) -> Result<Mat<QExt<C>>> {
    action.apply(m)
}

/// The closed 2x2 formula `[[α,β],[γ,δ]] -> [[δ^σ, γ^σ/y], [y β^σ, α^σ]]`.
pub fn twisted_sigma_2x2<C: Field>(m: &Mat<QExt<C>>) -> Result<Mat<QExt<C>>> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::Shape("expected 2x2 matrix".into()));
    }
    let y = QExt::<C>::y();
    let e = |i, j| m.get(i, j).sigma();
    Mat::from_rows(vec![vec![e(1, 1), e(1, 0).div(&y)?], vec![y.mul(&e(0, 1)), e(0, 0)]])
}

/// Coordinates of a matrix over `k(√x, y)` as a vector over `k(x, y)`:
/// real parts first, then the `√x` parts, each in row-major order.
pub fn l_coords<C: Field>(m: &Mat<QExt<C>>) -> Vec<RatF<C>> {
    let mut v: Vec<RatF<C>> = m.entries().iter().map(|e| e.re.clone()).collect();
    v.extend(m.entries().iter().map(|e| e.im.clone()));
    v
}

pub fn from_l_coords<C: Field>(n: usize, v: &[RatF<C>]) -> Result<Mat<QExt<C>>> {
    let m = n * n;
    if v.len() != 2 * m {
        return Err(Error::Shape("coordinate vector length".into()));
    }
    Mat::from_vec(n, n, (0..m).map(|i| QExt::new(v[i].clone(), v[m + i].clone())).collect())
}

/// The `k(x,y)`-basis `E_ij, √x E_ij` of `M_n(k(√x, y))`, in coordinate order.
pub fn l_basis<C: Field>(n: usize) -> Vec<Mat<QExt<C>>> {
    let mut out = Vec::with_capacity(2 * n * n);
    for coef in [QExt::one(), QExt::s()] {
        for i in 0..n {
            for j in 0..n {
                out.push(Mat::unit(n, i, j).scale(&coef));
            }
        }
    }
    out
}

/// Matrix over `k(x, y)` of a `k(x,y)`-linear map on `M_n(k(√x, y))`, one
/// column per basis element.
pub fn l_linear_matrix<C: Field>(n: usize, f: impl Fn(&Mat<QExt<C>>) -> Result<Mat<QExt<C>>>) -> Result<Mat<RatF<C>>> {
    let cols = l_basis::<C>(n).iter().map(|b| f(b).map(|m| l_coords(&m))).collect::<Result<Vec<_>>>()?;
    Mat::from_columns(&cols)
}

/// An explicit `k(x,y)`-basis of a subalgebra of `M_n(k(√x, y))`.
#[derive(Clone, Debug)]
pub struct FixedAlgebra<C> {
    n: usize,
    basis: Vec<Mat<QExt<C>>>,
    echelon: EchelonBasis<RatF<C>>,
}

impl<C: Field> FixedAlgebra<C> {
    pub fn from_basis(n: usize, basis: Vec<Mat<QExt<C>>>) -> Self {
        let mut echelon = EchelonBasis::new(2 * n * n);
        for b in &basis {
            echelon.insert(&l_coords(b));
        }
        FixedAlgebra { n, basis, echelon }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn basis(&self) -> &[Mat<QExt<C>>] {
        &self.basis
    }

    pub fn contains(&self, m: &Mat<QExt<C>>) -> bool {
        self.echelon.contains(&l_coords(m))
    }

    /// Same `k(x,y)`-span as the given matrices.
    pub fn spans_same(&self, others: &[Mat<QExt<C>>]) -> bool {
        let other = FixedAlgebra::from_basis(self.n, others.to_vec());
        other.dim() == self.dim() && others.iter().all(|m| self.contains(m))
    }

    /// Every product of two basis elements lies in the span.
    pub fn is_closed(&self) -> Result<bool> {
        for p in &self.basis {
            for q in &self.basis {
                if !self.contains(&p.mul(q)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Solves `θ(M) = M` over `k(x, y)`.
pub fn fixed_subalgebra<C: Field>(action: &TwistedAction<C>) -> Result<FixedAlgebra<C>> {
    let n = action.size();
    let sys = l_linear_matrix(n, |m| action.apply(m)?.sub(m))?;
    let basis = sys.kernel().iter().map(|v| from_l_coords(n, v)).collect::<Result<Vec<_>>>()?;
    Ok(FixedAlgebra::from_basis(n, basis))
}

/// Outcome of the x-adic residue computation for the symbol `(f, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCertificate {
    pub symbol: [String; 2],
    /// x-adic valuation of `f`.
    pub valuation: i64,
    pub valuation_g: i64,
    /// Polynomial in `y` representing the residue modulo squares.
    pub residue: String,
    pub square_geometric: bool,
    pub split_verdict: String,
}

impl ResidueCertificate {
    pub fn is_nonsplit(&self) -> bool {
        !self.square_geometric
    }
}

/// Tame symbol at `x = 0` of `(f, g)`:
/// `(-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)}` reduced to `k(y)`. A residue that is
/// not a square in `k̄(y)` proves `(f, g)` is a division algebra.
pub fn residue_class(f: &RatF<Rational>, g: &RatF<Rational>) -> Result<(i64, i64, Poly<Rational>)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("residue symbol"));
    }
    let (vf, uf) = f.val_x()?;
    let (vg, ug) = g.val_x()?;
    let sign = if (vf * vg) % 2 == 0 { RatF::one() } else { RatF::one().neg() };
    let r = sign.mul(&uf.pow(vg)?).div(&ug.pow(vf)?)?;
    // num/den and num*den differ by the square den^2
    Ok((vf, vg, r.numer().mul(r.denom())))
}

pub fn residue_symbol_at_x(f: &RatF<Rational>, g: &RatF<Rational>) -> Result<ResidueCertificate> {
    let (vf, vg, rep) = residue_class(f, g)?;
    let square = is_square_geometric(&rep)?;
    Ok(ResidueCertificate {
        symbol: [f.to_string(), g.to_string()],
        valuation: vf,
        valuation_g: vg,
        residue: rep.to_string(),
        square_geometric: square,
        split_verdict: if square { "inconclusive" } else { "non-split" }.to_string(),
    })
}

/// A nontrivial solution of `f u^2 + g v^2 = w^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicSolution {
    pub u: Poly<Rational>,
    pub v: Poly<Rational>,
    pub w: Poly<Rational>,
}

pub const DEFAULT_SEARCH_BUDGET: u128 = 1 << 32;

const PROBES: [(i64, i64); 4] = [(2, 3), (3, 7), (5, 2), (7, 11)];

fn monomials(dmax: u32) -> Vec<Mono> {
    let mut out: Vec<Mono> = (0..=dmax).flat_map(|d| (0..=d).map(move |ex| Mono::new(ex, d - ex))).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Coefficient vectors in `[-bound, bound]^m` whose first nonzero entry is
/// positive, plus the zero vector first.
fn sign_normalized(m: usize, bound: i64) -> Vec<Vec<i64>> {
    let base = 2 * bound + 1;
    let total = (base as u64).pow(m as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut k = idx;
        let mut c = vec![0i64; m];
        for slot in c.iter_mut() {
            *slot = (k % base as u64) as i64 - bound;
            k /= base as u64;
        }
        if c.iter().find(|&&v| v != 0).is_none_or(|&v| v > 0) {
            out.push(c);
        }
    }
    out.sort();
    out
}

fn probe_scale(p: &Poly<Rational>, x0: i64, y0: i64) -> Rational {
    p.eval_with(&Rational::from_int(x0), &Rational::from_int(y0), |c: &Rational| Ok(c.clone()))
        .expect("polynomial evaluation")
}

fn is_perfect_square(v: i128) -> bool {
    if v < 0 {
        return false;
    }
    if !matches!(v & 15, 0 | 1 | 4 | 9) {
        return false;
    }
    let r = v.sqrt();
    r * r == v
}

/// Exact square root of a polynomial over `Q`, if it exists.
pub fn poly_sqrt(p: &Poly<Rational>) -> Option<Poly<Rational>> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let (m0, c0) = p.leading()?.clone();
    if m0.ex % 2 != 0 || m0.ey % 2 != 0 || c0.0.is_negative() {
        return None;
    }
    let (rn, rd) = (c0.numer().sqrt(), c0.denom().sqrt());
    if &(&rn * &rn) != c0.numer() || &(&rd * &rd) != c0.denom() {
        return None;
    }
    let lead_m = Mono::new(m0.ex / 2, m0.ey / 2);
    let lead_c = Rational(num_rational::BigRational::new(rn, rd));
    let mut w = Poly::monomial(lead_c.clone(), lead_m.ex, lead_m.ey);
    let mut last = lead_m;
    let two_lead = lead_c.add(&lead_c);
    loop {
        let r = p.sub(&w.mul(&w));
        let Some((m, c)) = r.leading().cloned() else { return Some(w) };
        if m.ex < lead_m.ex || m.ey < lead_m.ey {
            return None;
        }
        let t = Mono::new(m.ex - lead_m.ex, m.ey - lead_m.ey);
        if t >= last {
            return None;
        }
        last = t;
        w = w.add(&Poly::monomial(c.div(&two_lead).ok()?, t.ex, t.ey));
    }
}

/// Exhaustive search for a nontrivial `f u^2 + g v^2 = w^2` with `u, v, w` of
/// total degree at most `dmax` and integer coefficients in
/// `[-coeff_bound, coeff_bound]`. Solutions are taken up to the signs of `u`
/// and `v`, and the first one in enumeration order is returned.
///
/// Finding nothing proves nothing about splitness; the residue is the proof.
pub fn conic_search(
    f: &Poly<Rational>,
    g: &Poly<Rational>,
    dmax: u32,
    coeff_bound: i64,
    budget: u128,
    exec: Exec,
) -> Result<Option<ConicSolution>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("conic search"));
    }
    let monos = monomials(dmax);
    let m = monos.len();
    let space = (2 * coeff_bound as u128 + 1).pow(m as u32).div_ceil(2);
    let pairs = space * space;
    if pairs > budget {
        return Err(Error::Budget { count: pairs, budget });
    }
    let cands = sign_normalized(m, coeff_bound);
    let scaled: Vec<(i128, i128)> = PROBES
        .iter()
        .map(|&(x0, y0)| {
            let fv = probe_scale(f, x0, y0);
            let gv = probe_scale(g, x0, y0);
            let d = num_integer::lcm(fv.denom().clone(), gv.denom().clone());
            let d2 = Rational(num_rational::BigRational::from_integer(&d * &d));
            let to_i = |q: Rational| q.mul(&d2).numer().to_i128();
            match (to_i(fv), to_i(gv)) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(Error::NotRepresentable("probe value exceeds 128 bits".into())),
            }
        })
        .collect::<Result<_>>()?;
    let probe_sq: Vec<[i128; PROBES.len()]> = cands
        .iter()
        .map(|c| {
            let mut out = [0i128; PROBES.len()];
            for (k, &(x0, y0)) in PROBES.iter().enumerate() {
                let v: i128 = monos
                    .iter()
                    .zip(c)
                    .map(|(mo, &ci)| ci as i128 * (x0 as i128).pow(mo.ex) * (y0 as i128).pow(mo.ey))
                    .sum();
                out[k] = v * v;
            }
            out
        })
        .collect();
    let to_poly = |c: &[i64]| Poly::from_terms(monos.iter().zip(c).map(|(mo, &ci)| (*mo, Rational::from_int(ci))));
    let hit = exec.find_first_range(0..cands.len() as u64, |iu| {
        let iu = iu as usize;
        let pu = &probe_sq[iu];
        for (iv, pv) in probe_sq.iter().enumerate() {
            if iu == 0 && iv == 0 {
                continue;
            }
            if !(0..PROBES.len()).all(|k| is_perfect_square(scaled[k].0 * pu[k] + scaled[k].1 * pv[k])) {
                continue;
            }
            let u = to_poly(&cands[iu]);
            let v = to_poly(&cands[iv]);
            let rhs = f.mul(&u.mul(&u)).add(&g.mul(&v.mul(&v)));
            let Some(w) = poly_sqrt(&rhs) else { continue };
            let in_bounds = w.total_degree().unwrap_or(0) <= dmax
                && w.terms().iter().all(|(_, c)| {
                    c.denom() == &num_bigint::BigInt::from(1)
                        && c.numer().abs() <= num_bigint::BigInt::from(coeff_bound)
                });
            if in_bounds {
                return Some(ConicSolution { u, v, w });
            }
        }
        None
    });
    Ok(hit)
}

/// The splitting equation `x u^2 + y v^2 = w^2` of the generic symbol.
pub fn bounded_conic_search(dmax: u32, coeff_bound: i64, exec: Exec) -> Result<Option<ConicSolution>> {
    conic_search(&Poly::x(), &Poly::y(), dmax, coeff_bound, DEFAULT_SEARCH_BUDGET, exec)
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = RatF<Rational>;
    type Q = Quat<Rational>;
    type K = QExt<Rational>;

    #[test]
    fn generator_relations() {
        let (a, b) = (Q::a(), Q::b());
        assert_eq!(a.mul(&b), Q::ab());
        assert_eq!(b.mul(&a), Q::ab().neg());
        assert_eq!(a.mul(&a), Q::scalar(L::x()));
        assert_eq!(b.mul(&b), Q::scalar(L::y()));
        let p = Q::one().add(&a);
        assert_eq!(p.mul(&b).norm(), p.norm().mul(&b.norm()));
        assert_eq!(p.norm(), L::one().sub(&L::x()));
        assert_eq!(b.norm(), L::y().neg());
    }

    #[test]
    fn matrix_model() {
        let a = image_a::<Rational>();
        let b = image_b::<Rational>();
        assert_eq!(embed_m2k(&Q::a()), a);
        assert_eq!(a.mul(&a).unwrap(), Mat::scalar(2, K::x()));
        assert!(a.mul(&b).unwrap().add(&b.mul(&a).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn twisted_examples() {
        let act = TwistedAction::<Rational>::standard();
        let e12 = Mat::<K>::unit(2, 0, 1);
        let want = Mat::<K>::unit(2, 1, 0).scale(&K::y());
        assert_eq!(act.apply(&e12).unwrap(), want);
        assert_eq!(act.apply(&image_a()).unwrap(), image_a());
        assert_eq!(twisted_sigma_2x2(&e12).unwrap(), want);
    }

    #[test]
    fn standard_fixed_algebra_is_the_model() {
        let fixed = fixed_subalgebra(&TwistedAction::<Rational>::standard()).unwrap();
        assert_eq!(fixed.dim(), 4);
        let image: Vec<_> = [Q::one(), Q::a(), Q::b(), Q::ab()].iter().map(embed_m2k).collect();
        assert!(fixed.spans_same(&image));
        assert!(fixed.is_closed().unwrap());
    }

    #[test]
    fn residue_examples() {
        let x = L::x();
        let y = L::y();
        let c = residue_symbol_at_x(&x, &y).unwrap();
        assert_eq!((c.residue.as_str(), c.square_geometric, c.split_verdict.as_str()), ("y", false, "non-split"));
        let c = residue_symbol_at_x(&x, &y.mul(&y)).unwrap();
        assert!(c.square_geometric);
        let c = residue_symbol_at_x(&x, &L::one()).unwrap();
        assert_eq!(c.residue, "1");
        let c = residue_symbol_at_x(&x, &x).unwrap();
        assert_eq!((c.residue.as_str(), c.square_geometric), ("-1", true));
        assert!(residue_symbol_at_x(&L::zero(), &y).is_err());
    }

    #[test]
    fn square_roots() {
        let p = Poly::<Rational>::x().add(&Poly::y().scale(&Rational::from_int(-2))).add(&Poly::one());
        assert_eq!(poly_sqrt(&p.mul(&p)).map(|w| w.mul(&w)), Some(p.mul(&p)));
        assert_eq!(poly_sqrt(&Poly::x()), None);
        assert_eq!(poly_sqrt(&Poly::x().add(&Poly::one())), None);
    }

    #[test]
    fn small_searches() {
        assert_eq!(bounded_conic_search(1, 1, Exec::Sequential).unwrap(), None);
        // (1, y) is split: 1*1 + y*0 = 1
        let sol = conic_search(&Poly::one(), &Poly::y(), 1, 1, DEFAULT_SEARCH_BUDGET, Exec::Parallel).unwrap().unwrap();
        let lhs = sol.u.mul(&sol.u).add(&Poly::y().mul(&sol.v.mul(&sol.v)));
        assert_eq!(lhs, sol.w.mul(&sol.w));
    }
}
