//! The symplectic and orthogonal witness tuples over `k(√x, y)` and the
//! pipeline that verifies them and assembles the obstruction report.
//!
//! Both witnesses use the twisting matrix `C = [[0, I], [y I, 0]]`, with
//! `C x_i C^{-1} = x_i^σ` for every generator. The first generator is
//! `diag(√x D, -√x D)` with `D = diag(1, ..., n)`.

use std::time::{Duration, Instant};

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Fp, Rational};
use crate::form::{BilForm, Group};
use crate::matrix::{Mat, MatJson};
use crate::quaternion::{fixed_subalgebra, l_coords, residue_symbol_at_x, FixedAlgebra, TwistedAction};
use crate::ratfunc::RatF;
use crate::stability::{
    find_isotropic_submodule, invariant_subspaces_distinct, stabilizer_in_group, Method, ModTuple,
    DEFAULT_SUBSPACE_BUDGET,
};
use crate::{K, L};

pub const CHECK_NAMES: [&str; 10] = [
    "lie_membership",
    "distinct_eigenvalues",
    "equivariance",
    "no_isotropic_submodule",
    "eigenvector_pairing",
    "trivial_stabilizer",
    "quaternion_copy",
    "centralizer_split",
    "fixed_dim",
    "residue_nonsplit",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub group: Group,
    pub n: usize,
    pub g: usize,
    /// Additional generators appended after the `g` standard ones.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub extra: Vec<MatJson>,
}

impl WitnessSpec {
    pub fn new(group: Group, n: usize, g: usize) -> Result<Self> {
        let s = WitnessSpec { group, n, g, extra: Vec::new() };
        s.validate()?;
        Ok(s)
    }

    pub fn with_extra(mut self, extra: &[Mat<K>]) -> Self {
        self.extra = extra.iter().map(MatJson::from).collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self.group {
            Group::GL => return Err(Error::Spec("witnesses exist for Sp and SO only".into())),
            Group::SO if self.n < 2 => return Err(Error::Spec("SO needs n >= 2 (SO_2 is a torus)".into())),
            _ => {}
        }
        if self.n == 0 {
            return Err(Error::Spec("n must be positive".into()));
        }
        if self.g < 2 {
            return Err(Error::Spec("g must be at least 2".into()));
        }
        Ok(())
    }
}

fn kx(v: i64) -> K {
    K::from_int(v)
}

fn d_matrix(n: usize) -> Mat<K> {
    Mat::diag(&(1..=n as i64).map(kx).collect::<Vec<_>>())
}

/// `C = [[0, I], [y I, 0]]`.
pub fn twisting_matrix(n: usize) -> Mat<K> {
    let i = Mat::<K>::identity(n);
    let z = Mat::<K>::zeros(n, n);
    Mat::block2(&z, &i, &i.scale(&K::y()), &z).expect("square blocks")
}

/// `diag(√x D, -√x D)`.
pub fn first_generator(n: usize) -> Mat<K> {
    let sd = d_matrix(n).scale(&K::s());
    let z = Mat::<K>::zeros(n, n);
    Mat::block2(&sd, &z, &z, &sd.neg()).expect("square blocks")
}

/// `[[√x M, y N], [y^2 N, -√x M]]`.
fn coupled(m: &Mat<K>, nn: &Mat<K>) -> Mat<K> {
    let y = K::y();
    let sm = m.scale(&K::s());
    Mat::block2(&sm, &nn.scale(&y), &nn.scale(&y.mul(&y)), &sm.neg()).expect("square blocks")
}

/// The matrices `A` (ones in the first row and column) and `Z` (`+1` along the
/// first row, `-1` down the first column, zero diagonal).
pub fn so_blocks(n: usize) -> (Mat<K>, Mat<K>) {
    let a = Mat::from_fn(n, n, |i, j| if i == 0 || j == 0 { kx(1) } else { kx(0) });
    let z = Mat::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => kx(0),
        (0, _) => kx(1),
        (_, 0) => kx(-1),
        _ => kx(0),
    });
    (a, z)
}

/// A symplectic generator `[[√x J, y J], [y^2 J, -√x J]]` with `J` all ones.
/// It lies in `Lie(Sp)`, satisfies `C x C^{-1} = x^σ`, and couples the
/// `n` planes `span(e_i, e_{n+i})` that the standard symplectic witness
/// leaves invariant.
pub fn sp_coupling_generator(n: usize) -> Mat<K> {
    let j = Mat::from_fn(n, n, |_, _| kx(1));
    coupled(&j, &j)
}

/// A witness tuple together with its form and twisting matrix.
#[derive(Clone, Debug)]
pub struct Witness {
    pub spec: WitnessSpec,
    pub tuple: ModTuple<K>,
    pub c: Mat<K>,
}

impl Witness {
    pub fn build(spec: &WitnessSpec) -> Result<Self> {
        spec.validate()?;
        let n = spec.n;
        let x1 = first_generator(n);
        let (rest, form) = match spec.group {
            Group::Sp => (twisting_matrix(n).scale(&K::y()), BilForm::standard_symplectic(n)),
            _ => {
                let (a, z) = so_blocks(n);
                (coupled(&a, &z), BilForm::split_symmetric(n))
            }
        };
        let mut mats = vec![x1];
        mats.extend(std::iter::repeat_n(rest, spec.g - 1));
        for m in &spec.extra {
            mats.push(m.parse::<K>()?);
        }
        let tuple = ModTuple::new(2 * n, mats, Some(form))?;
        Ok(Witness { spec: spec.clone(), tuple, c: twisting_matrix(n) })
    }

    /// Replaces generator `i`, keeping the form. The result must still lie in
    /// the Lie algebra.
    pub fn replace_generator(&self, i: usize, m: Mat<K>) -> Result<Self> {
        let mut mats = self.tuple.mats().to_vec();
        if i >= mats.len() {
            return Err(Error::Shape(format!("no generator {}", i)));
        }
        mats[i] = m;
        let tuple = ModTuple::new(self.tuple.n(), mats, self.tuple.form().cloned())?;
        Ok(Witness { tuple, ..self.clone() })
    }

    pub fn form(&self) -> &BilForm<K> {
        self.tuple.form().expect("witnesses carry a form")
    }
}

pub fn build_sp_witness(spec: &WitnessSpec) -> Result<ModTuple<K>> {
    if spec.group != Group::Sp {
        return Err(Error::Spec("expected group Sp".into()));
    }
    Ok(Witness::build(spec)?.tuple)
}

pub fn build_so_witness(spec: &WitnessSpec) -> Result<ModTuple<K>> {
    if spec.group != Group::SO {
        return Err(Error::Spec("expected group SO".into()));
    }
    Ok(Witness::build(spec)?.tuple)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: String,
    pub certificate: Value,
}

impl Check {
    fn new(name: &str, pass: bool, certificate: Value) -> Self {
        Check { name: name.to_string(), verdict: if pass { "pass" } else { "fail" }.to_string(), certificate }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: WitnessSpec,
    pub checks: Vec<Check>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conclusion: Option<String>,
    pub paper_refs: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    fn assemble(spec: &WitnessSpec, checks: Vec<Check>, refs: &[&str], start: Instant) -> Self {
        let pass = checks.iter().all(Check::passed);
        VerificationReport {
            spec: spec.clone(),
            checks,
            verdict: if pass { "pass" } else { "fail" }.to_string(),
            conclusion: None,
            paper_refs: refs.iter().map(|s| s.to_string()).collect(),
            elapsed: start.elapsed(),
        }
    }
}

fn mat_json(m: &Mat<K>) -> Value {
    serde_json::to_value(MatJson::from(m)).expect("serializable")
}

fn vec_json(v: &[K]) -> Value {
    Value::from(v.iter().map(|e| e.to_string()).collect::<Vec<_>>())
}

fn err_json(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn check_lie(w: &Witness) -> Result<Check> {
    let form = w.form();
    let bad: Vec<usize> = w
        .tuple
        .mats()
        .iter()
        .enumerate()
        .filter_map(|(i, m)| match form.lie_member(m) {
            Ok(true) => None,
            _ => Some(i),
        })
        .collect();
    Ok(Check::new("lie_membership", bad.is_empty(), json!({ "generators": w.tuple.g(), "failing": bad })))
}

fn check_eigenvalues(w: &Witness) -> Result<Check> {
    let x1 = &w.tuple.mats()[0];
    let n = w.spec.n;
    let diag = x1.diagonal();
    let expected: Vec<K> =
        (1..=n as i64).map(|d| K::s().mul(&kx(d))).chain((1..=n as i64).map(|d| K::s().mul(&kx(-d)))).collect();
    let distinct = (0..diag.len()).all(|i| (i + 1..diag.len()).all(|j| diag[i] != diag[j]));
    let pass = x1.is_diagonal() && distinct && diag == expected;
    Ok(Check::new(
        "distinct_eigenvalues",
        pass,
        json!({ "eigenvalues": vec_json(&diag), "diagonal": x1.is_diagonal() }),
    ))
}

fn check_equivariance(w: &Witness) -> Result<Check> {
    let c_inv = w.c.inverse()?;
    let mut failing = Vec::new();
    for (i, m) in w.tuple.mats().iter().enumerate() {
        let lhs = w.c.mul(m)?.mul(&c_inv)?;
        let diff = lhs.sub(&m.sigma())?;
        if !diff.is_zero() {
            failing.push(json!({ "generator": i, "difference": mat_json(&diff) }));
        }
    }
    let rule = match w.spec.group {
        Group::Sp => "C x1 C^-1 = -x1 and C xi C^-1 = xi for i >= 2 (both read C x C^-1 = x^sigma)",
        _ => "C xi C^-1 = xi^sigma for all i",
    };
    Ok(Check::new(
        "equivariance",
        failing.is_empty(),
        json!({ "rule": rule, "twisting_matrix": mat_json(&w.c), "failing": failing }),
    ))
}

fn check_isotropic(w: &Witness) -> Check {
    let invariant = invariant_subspaces_distinct(&w.tuple).map(|v| v.len());
    match (find_isotropic_submodule(&w.tuple, Method::Eigen, 0, Exec::Sequential), invariant) {
        (Ok(None), Ok(count)) => {
            Check::new("no_isotropic_submodule", true, json!({ "method": "eigen", "invariant_subspaces": count }))
        }
        (Ok(Some(s)), _) => Check::new(
            "no_isotropic_submodule",
            false,
            json!({ "method": "eigen", "isotropic_submodule": s.vectors().iter().map(|v| vec_json(v)).collect::<Vec<_>>() }),
        ),
        (Err(e), _) | (_, Err(e)) => Check::new("no_isotropic_submodule", false, err_json(&e)),
    }
}

fn check_pairing(w: &Witness) -> Result<Check> {
    let form = w.form();
    let m = 2 * w.spec.n;
    let unit = |i: usize| (0..m).map(|j| if i == j { K::one() } else { K::zero() }).collect::<Vec<_>>();
    let mut values = Vec::new();
    let mut pass = true;
    let (rule, partner) = match w.spec.group {
        Group::Sp => ("B(v, C v) for each eigenvector v of x1", &w.c),
        _ => ("B(x2 e_i, x2 e_i) for each eigenvector e_i of x1", &w.tuple.mats()[1]),
    };
    for i in 0..m {
        let v = unit(i);
        let val = match w.spec.group {
            Group::Sp => form.eval(&v, &partner.mul_vec(&v)?)?,
            _ => {
                let u = partner.mul_vec(&v)?;
                form.eval(&u, &u)?
            }
        };
        pass &= !val.is_zero();
        values.push(val.to_string());
    }
    Ok(Check::new("eigenvector_pairing", pass, json!({ "rule": rule, "values": values })))
}

fn check_stabilizer(w: &Witness) -> Check {
    match stabilizer_in_group(&w.tuple, w.spec.group) {
        Ok(s) => {
            let pass = s.is_plus_minus_identity();
            let mut cert = json!({
                "commutant_dim": s.commutant_dim,
                "description": s.describe(),
                "elements_found": s.elements.len(),
                "exhaustive": s.exhaustive,
            });
            if !pass {
                let n = w.tuple.n();
                let id = Mat::<K>::identity(n);
                if let Some(g) = s.elements.iter().find(|g| **g != id && **g != id.neg()) {
                    cert["counterexample"] = mat_json(g);
                }
            }
            Check::new("trivial_stabilizer", pass, cert)
        }
        Err(e) => Check::new("trivial_stabilizer", false, err_json(&e)),
    }
}

const STABILITY_REFS: [&str; 4] = [
    "adjoint anti-involution and Lie condition r(x_i) = -x_i",
    "Sp/SO stability iff no totally isotropic submodule",
    "stable points have trivial stabilisers",
    "witness construction and its equivariance under C",
];

const CLASS_REFS: [&str; 2] =
    ["twisted Galois action fixing the quaternion algebra", "pullback of the Azumaya algebra is B tensor M_n"];

const RESIDUE_REF: &str = "the generic quaternion algebra (x, y) is not split";

const OBSTRUCTION_REF: &str = "nonzero Brauer class obstructs a universal bundle";

fn stability_checks(w: &Witness) -> Result<Vec<Check>> {
    Ok(vec![
        check_lie(w)?,
        check_eigenvalues(w)?,
        check_equivariance(w)?,
        check_isotropic(w),
        check_pairing(w)?,
        check_stabilizer(w),
    ])
}

/// The six stability checks, in order.
pub fn verify_witness(spec: &WitnessSpec) -> Result<VerificationReport> {
    verify_built(&Witness::build(spec)?)
}

pub fn verify_built(w: &Witness) -> Result<VerificationReport> {
    let start = Instant::now();
    let checks = stability_checks(w)?;
    Ok(VerificationReport::assemble(&w.spec, checks, &STABILITY_REFS, start))
}

/// `diag(√x I, -√x I)`.
pub fn e_matrix(n: usize) -> Mat<K> {
    let s = Mat::<K>::identity(n).scale(&K::s());
    let z = Mat::<K>::zeros(n, n);
    Mat::block2(&s, &z, &z, &s.neg()).expect("square blocks")
}

/// Basis of the elements of the fixed algebra commuting with every matrix in
/// `with`, solved over `k(x, y)` in the coordinates of the fixed basis.
pub fn centralizer_in(fixed: &FixedAlgebra<Rational>, with: &[Mat<K>]) -> Result<Vec<Mat<K>>> {
    let basis = fixed.basis();
    let cols = basis
        .iter()
        .map(|b| -> Result<Vec<L>> {
            let mut col = Vec::new();
            for m in with {
                col.extend(l_coords(&b.commutator(m)?));
            }
            Ok(col)
        })
        .collect::<Result<Vec<_>>>()?;
    let sys = Mat::from_columns(&cols)?;
    let n = fixed.size();
    sys.kernel()
        .iter()
        .map(|c| {
            let mut acc = Mat::<K>::zeros(n, n);
            for (ci, b) in c.iter().zip(basis) {
                if !ci.is_zero() {
                    acc = acc.add(&b.scale(&K::from_base(ci.clone())))?;
                }
            }
            Ok(acc)
        })
        .collect()
}

fn class_checks(w: &Witness) -> Result<Vec<Check>> {
    let n = w.spec.n;
    let m = 2 * n;
    let action = TwistedAction::new(w.c.clone())?;
    let e = e_matrix(n);
    let c = &w.c;
    let x_id = Mat::scalar(m, K::x());
    let y_id = Mat::scalar(m, K::y());
    let relations = [
        ("theta(E) = E", action.apply(&e)?.sub(&e)?),
        ("theta(C) = C", action.apply(c)?.sub(c)?),
        ("E^2 = x I", e.mul(&e)?.sub(&x_id)?),
        ("C^2 = y I", c.mul(c)?.sub(&y_id)?),
        ("E C = -C E", e.mul(c)?.add(&c.mul(&e)?)?),
    ];
    let mut failing = Vec::new();
    for (name, diff) in &relations {
        if !diff.is_zero() {
            failing.push(json!({ "relation": name, "difference": mat_json(diff) }));
        }
    }
    let copy = Check::new(
        "quaternion_copy",
        failing.is_empty(),
        json!({
            "E": mat_json(&e),
            "C": mat_json(c),
            "relations": relations.iter().map(|(r, _)| *r).collect::<Vec<_>>(),
            "failing": failing,
        }),
    );

    let fixed = fixed_subalgebra(&action)?;
    let cent = centralizer_in(&fixed, &[e.clone(), c.clone()])?;
    let sigma_fixed = cent.iter().all(|b| b.entries().iter().all(K::is_base));
    let units_present = {
        let span = FixedAlgebra::from_basis(m, cent.clone());
        (0..n).all(|i| {
            (0..n).all(|j| {
                span.contains(
                    &Mat::block2(&Mat::unit(n, i, j), &Mat::zeros(n, n), &Mat::zeros(n, n), &Mat::unit(n, i, j))
                        .expect("blocks"),
                )
            })
        })
    };
    let split = Check::new(
        "centralizer_split",
        cent.len() == n * n && sigma_fixed && units_present,
        json!({
            "dimension": cent.len(),
            "expected": n * n,
            "sigma_fixed_entries": sigma_fixed,
            "matrix_units_diag(E_ij, E_ij)": units_present,
        }),
    );
    let closed = fixed.is_closed()?;
    let dim = Check::new(
        "fixed_dim",
        fixed.dim() == 4 * n * n && closed,
        json!({ "dimension": fixed.dim(), "expected": 4 * n * n, "closed_under_products": closed }),
    );
    Ok(vec![copy, split, dim])
}

/// Constructive identification of the pulled-back class with `B ⊗ M_n`.
pub fn pullback_class_check(spec: &WitnessSpec) -> Result<VerificationReport> {
    let w = Witness::build(spec)?;
    let start = Instant::now();
    let checks = class_checks(&w)?;
    Ok(VerificationReport::assemble(spec, checks, &CLASS_REFS, start))
}

fn residue_check() -> Result<Check> {
    let cert = residue_symbol_at_x(&RatF::x(), &RatF::y())?;
    Ok(Check::new("residue_nonsplit", cert.is_nonsplit(), serde_json::to_value(&cert).expect("serializable")))
}

pub const CONCLUSION: &str =
    "obstruction class nonzero: no universal bundle on any Zariski-open subset of the stable moduli";

/// Stability, class identification and non-splitness, chained.
pub fn obstruction_report(spec: &WitnessSpec) -> Result<VerificationReport> {
    obstruction_report_built(&Witness::build(spec)?)
}

pub fn obstruction_report_built(w: &Witness) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut checks = stability_checks(w)?;
    checks.extend(class_checks(w)?);
    checks.push(residue_check()?);
    let mut refs: Vec<&str> = STABILITY_REFS.to_vec();
    refs.extend(CLASS_REFS);
    refs.push(RESIDUE_REF);
    refs.push(OBSTRUCTION_REF);
    let mut report = VerificationReport::assemble(&w.spec, checks, &refs, start);
    if report.passed() {
        report.verdict = "non-split".to_string();
        report.conclusion = Some(CONCLUSION.to_string());
    } else {
        report.verdict = "inconclusive".to_string();
        report.conclusion = Some(format!("failed checks: {}", report.failed_checks().join(", ")));
    }
    Ok(report)
}

/// Prime used for the finite-field comparison of the isotropy verdict.
pub const SPECIALIZATION_PRIME: u32 = 7;

type Fs = Fp<SPECIALIZATION_PRIME>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationPoint {
    pub sqrt_x: u32,
    pub y: u32,
    pub eigen_isotropic: bool,
    pub enumerated_isotropic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationAgreement {
    pub prime: u32,
    pub seed: u64,
    /// Verdict over `k(√x, y)`: whether an isotropic submodule exists.
    pub generic_isotropic: bool,
    pub points: Vec<SpecializationPoint>,
}

impl SpecializationAgreement {
    pub fn agreements(&self) -> usize {
        self.points
            .iter()
            .filter(|p| p.eigen_isotropic == self.generic_isotropic && p.enumerated_isotropic == self.generic_isotropic)
            .count()
    }

    pub fn all_agree(&self) -> bool {
        self.agreements() == self.points.len()
    }
}

/// Specializes `(√x, y)` to random nonzero points of `F_7^2` and compares the
/// isotropy verdict over `k(√x, y)` with both the eigenvector method and the
/// exhaustive subspace enumeration over `F_7`. Needs `2n <= 4`.
pub fn specialization_agreement(w: &Witness, trials: usize, seed: u64) -> Result<SpecializationAgreement> {
    let m = w.tuple.n();
    if m > 4 {
        return Err(Error::Budget {
            count: crate::stability::count_proper_subspaces(m, SPECIALIZATION_PRIME as u64),
            budget: DEFAULT_SUBSPACE_BUDGET,
        });
    }
    let generic = find_isotropic_submodule(&w.tuple, Method::Eigen, 0, Exec::Sequential)?.is_some();
    let mut rng = crate::random::rng(seed);
    let mut points = Vec::with_capacity(trials);
    for _ in 0..trials {
        let s0 = rng.gen_range(1..SPECIALIZATION_PRIME);
        let y0 = rng.gen_range(1..SPECIALIZATION_PRIME);
        let (sf, yf) = (Fs::new(s0 as i64), Fs::new(y0 as i64));
        let t: ModTuple<Fs> = w.tuple.try_map(|e| e.specialize(&sf, &yf))?;
        let eigen = find_isotropic_submodule(&t, Method::Eigen, 0, Exec::Sequential)?.is_some();
        let enumerated =
            find_isotropic_submodule(&t, Method::Enumerate, DEFAULT_SUBSPACE_BUDGET, Exec::Parallel)?.is_some();
        points.push(SpecializationPoint {
            sqrt_x: s0,
            y: y0,
            eigen_isotropic: eigen,
            enumerated_isotropic: enumerated,
        });
    }
    Ok(SpecializationAgreement { prime: SPECIALIZATION_PRIME, seed, generic_isotropic: generic, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> K {
        K::s().mul(&kx(v))
    }

    #[test]
    fn small_sp_witness_matrices() {
        let t = build_sp_witness(&WitnessSpec::new(Group::Sp, 1, 2).unwrap()).unwrap();
        assert_eq!(t.mats()[0], Mat::diag(&[s(1), s(-1)]));
        let y = K::y();
        let want = Mat::from_rows(vec![vec![kx(0), y.clone()], vec![y.mul(&y), kx(0)]]).unwrap();
        assert_eq!(t.mats()[1], want);
        assert!(matches!(WitnessSpec::new(Group::Sp, 1, 1), Err(Error::Spec(_))));
        assert!(matches!(WitnessSpec::new(Group::SO, 1, 2), Err(Error::Spec(_))));
    }

    #[test]
    fn so_blocks_for_n2() {
        let (a, z) = so_blocks(2);
        assert_eq!(a, Mat::from_rows(vec![vec![kx(1), kx(1)], vec![kx(1), kx(0)]]).unwrap());
        assert_eq!(z, Mat::from_rows(vec![vec![kx(0), kx(1)], vec![kx(-1), kx(0)]]).unwrap());
        let t = build_so_witness(&WitnessSpec::new(Group::SO, 2, 2).unwrap()).unwrap();
        let y2 = K::y().mul(&K::y());
        assert_eq!(t.mats()[1].col(0), vec![K::s(), K::s(), kx(0), y2.neg()]);
    }

    #[test]
    fn sp_n1_full_report() {
        let r = obstruction_report(&WitnessSpec::new(Group::Sp, 1, 2).unwrap()).unwrap();
        assert_eq!(r.checks.len(), 10);
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.verdict, "non-split");
        let names: Vec<_> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECK_NAMES);
        let values = &r.check("eigenvector_pairing").unwrap().certificate["values"];
        assert_eq!(values[0], "(-y) + (0)*sqrt(x)");
    }
}
