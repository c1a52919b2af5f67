//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion.
//!
//! Criteria listed in [`KNOWN_FAILURES`] are expected to fail; the process
//! exits nonzero if any other criterion fails or a known failure passes.

use std::time::{Duration, Instant};

use brauer_witness::poly::Mono;
use brauer_witness::quaternion::*;
use brauer_witness::random::*;
use brauer_witness::stability::*;
use brauer_witness::tuple_json::tuple_to_json;
use brauer_witness::witness::*;
use brauer_witness::{BilForm, Exec, Field, Fp, Group, Poly, RatF, Rational, L};
use rand::Rng;

type F3 = Fp<3>;
type F5 = Fp<5>;

const SEED: u64 = 20240611;
const BUDGET: u128 = 1_000_000;

const LIMIT_SP_WITNESS: Duration = Duration::from_secs(30);
const LIMIT_SO_WITNESS: Duration = Duration::from_secs(30);
const LIMIT_ORACLE: Duration = Duration::from_secs(60);
const LIMIT_QUATERNION: Duration = Duration::from_secs(30);
const LIMIT_PULLBACK: Duration = Duration::from_secs(60);

const ORACLE_TUPLES_PER_CASE: usize = 250;
const EIGEN_TUPLES: usize = 200;
const NORM_PAIRS: usize = 1000;
const STABLE_SP_TUPLES: usize = 100;

/// The symplectic witnesses with `n >= 2` split into `n` orthogonal invariant
/// planes, so their stabilizer is the diagonal sign group of order `2^n`.
const KNOWN_FAILURES: [u32; 2] = [1, 7];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.detail = format!("{} [{:.2}s", o.detail, elapsed.as_secs_f64());
    if let Some(limit) = limit {
        o.detail += &format!(" / limit {}s", limit.as_secs());
        if elapsed > limit {
            o.pass = false;
        }
    }
    o.detail += "]";
    o
}

fn witness_specs(group: Group) -> Vec<WitnessSpec> {
    let ns: &[usize] = if group == Group::Sp { &[1, 2, 3] } else { &[2, 3] };
    ns.iter().flat_map(|&n| [2, 3].map(|g| WitnessSpec::new(group, n, g).expect("valid spec"))).collect()
}

fn witness_suite(group: Group) -> Outcome {
    let mut failures = Vec::new();
    for spec in witness_specs(group) {
        let r = verify_witness(&spec).expect("witness builds");
        if !r.passed() {
            failures.push(format!("n={} g={}: {}", spec.n, spec.g, r.failed_checks().join(",")));
        }
    }
    let total = witness_specs(group).len();
    if failures.is_empty() {
        outcome(true, format!("{total}/{total} witnesses pass all checks"))
    } else {
        outcome(false, format!("{}/{total} pass; failing {}", total - failures.len(), failures.join("; ")))
    }
}

fn oracle_case<F: Sample + brauer_witness::FiniteField>(n: usize, rng: &mut impl Rng) -> (usize, usize, usize) {
    let (mut simple_violations, mut mu_violations, mut nonempty) = (0, 0, 0);
    for _ in 0..ORACLE_TUPLES_PER_CASE {
        let t: ModTuple<F> = random_tuple(n, 2, rng);
        let subs = enumerate_invariant_subspaces_ff(&t, BUDGET, Exec::Parallel).expect("within budget");
        if generated_algebra_dim(&t).expect("dim") == n * n && !subs.is_empty() {
            simple_violations += 1;
        }
        if !subs.is_empty() {
            nonempty += 1;
        }
        for w in &subs {
            let flag = ops_from_flag(w, Group::GL, None).expect("flag");
            let conj = t.conjugate_by(&flag.basis).expect("invertible");
            if mu(&conj, &flag.ops).expect("mu") > 0 {
                mu_violations += 1;
            }
        }
    }
    (simple_violations, mu_violations, nonempty)
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rng(SEED);
    let mut totals = (0, 0, 0);
    for n in [2, 3] {
        for (a, b, c) in [oracle_case::<F3>(n, &mut rng), oracle_case::<F5>(n, &mut rng)] {
            totals = (totals.0 + a, totals.1 + b, totals.2 + c);
        }
    }
    let count = 4 * ORACLE_TUPLES_PER_CASE;
    outcome(
        totals.0 == 0 && totals.1 == 0,
        format!(
            "{count} tuples, {} with submodules; simplicity violations {}, mu violations {}",
            totals.2, totals.0, totals.1
        ),
    )
}

fn eigen_completeness() -> Outcome {
    let mut rng = rng(SEED + 1);
    let (mut mismatches, mut found) = (0, 0);
    for i in 0..EIGEN_TUPLES {
        let n = 2 + i % 2;
        let x1 = random_distinct_diagonalizable::<F5, _>(n, &mut rng).expect("n <= 5");
        let x2 = random_mat::<F5, _>(n, n, &mut rng);
        let t = ModTuple::new(n, vec![x1, x2], None).expect("tuple");
        let eigen = invariant_subspaces_distinct(&t).expect("distinct eigenvalues");
        let full = enumerate_invariant_subspaces_ff(&t, BUDGET, Exec::Parallel).expect("within budget");
        found += full.len();
        let same = eigen.len() == full.len() && eigen.iter().all(|s| full.contains(s));
        if !same {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{EIGEN_TUPLES} tuples, {found} invariant subspaces, {mismatches} mismatches"))
}

fn random_poly<R: Rng>(rng: &mut R) -> Poly<Rational> {
    Poly::from_terms((0..3).map(|_| (Mono::new(rng.gen_range(0..=2), rng.gen_range(0..=2)), Rational::sample(rng))))
}

/// Denominator factors, so that sums of random fractions share factors.
fn pool_factor(i: usize) -> Poly<Rational> {
    let one = Poly::<Rational>::one();
    match i {
        0 => Poly::x().add(&one),
        1 => Poly::y().sub(&one.scale(&Rational::from_int(2))),
        2 => Poly::x().add(&Poly::y()),
        _ => Poly::x().mul(&Poly::y()).add(&one),
    }
}

fn random_ratf<R: Rng>(rng: &mut R) -> L {
    let mut den = Poly::constant(Rational::from_int(rng.gen_range(1..=3)));
    if rng.gen_bool(0.5) {
        den = den.mul(&pool_factor(rng.gen_range(0..4)));
    }
    RatF::new(random_poly(rng), den).expect("nonzero denominator")
}

fn random_quat(rng: &mut impl Rng) -> Quat<Rational> {
    Quat::new(random_ratf(rng), random_ratf(rng), random_ratf(rng), random_ratf(rng))
}

fn quaternion_certification() -> Outcome {
    let fixed = fixed_subalgebra(&TwistedAction::<Rational>::standard()).expect("fixed algebra");
    let image: Vec<_> = [Quat::one(), Quat::a(), Quat::b(), Quat::ab()].iter().map(embed_m2k).collect();
    let descent = fixed.dim() == 4 && fixed.spans_same(&image);
    let cert = residue_symbol_at_x(&RatF::x(), &RatF::y()).expect("residue");
    let residue = cert.residue == "y" && !cert.square_geometric && cert.is_nonsplit();
    let search = bounded_conic_search(2, 2, Exec::Parallel).expect("within budget").is_none();
    let mut rng = rng(SEED + 2);
    let bad_norms = (0..NORM_PAIRS)
        .filter(|_| {
            let (a, b) = (random_quat(&mut rng), random_quat(&mut rng));
            a.mul(&b).norm() != a.norm().mul(&b.norm())
        })
        .count();
    outcome(
        descent && residue && search && bad_norms == 0,
        format!(
            "fixed dim {}, equals image {}; residue {} square {}; search(2,2) none {}; norm failures {bad_norms}/{NORM_PAIRS}",
            fixed.dim(),
            fixed.spans_same(&image),
            cert.residue,
            cert.square_geometric,
            search
        ),
    )
}

fn pullback_certification() -> Outcome {
    let mut failing = Vec::new();
    for (group, n) in [(Group::Sp, 1), (Group::Sp, 2), (Group::SO, 2)] {
        let r = pullback_class_check(&WitnessSpec::new(group, n, 2).expect("spec")).expect("pullback");
        if !r.passed() {
            failing.push(format!("{:?} n={n}: {}", group, r.failed_checks().join(",")));
        }
    }
    outcome(
        failing.is_empty(),
        if failing.is_empty() { "Sp n=1,2 and SO n=2 identified".to_string() } else { failing.join("; ") },
    )
}

fn stabilizer_triviality() -> Outcome {
    let mut witness_failures = Vec::new();
    for group in [Group::Sp, Group::SO] {
        for spec in witness_specs(group) {
            let w = Witness::build(&spec).expect("witness");
            let s = stabilizer_in_group(&w.tuple, group).expect("stabilizer");
            if !s.is_plus_minus_identity() {
                witness_failures.push(format!("{:?} n={} g={} ({})", group, spec.n, spec.g, s.describe()));
            }
        }
    }
    let form = BilForm::<F5>::standard_symplectic(2);
    let mut rng = rng(SEED + 3);
    let (mut stable, mut violations, mut drawn) = (0, 0, 0);
    while stable < STABLE_SP_TUPLES {
        drawn += 1;
        let t = random_lie_tuple(&form, 2, &mut rng);
        if !is_stable(&t, Group::Sp, Method::Enumerate, BUDGET, Exec::Parallel).expect("verdict").stable {
            continue;
        }
        stable += 1;
        if !stabilizer_in_group(&t, Group::Sp).expect("stabilizer").within_center() {
            violations += 1;
        }
    }
    outcome(
        witness_failures.is_empty() && violations == 0,
        format!(
            "random stable Sp tuples over F5: {stable} (of {drawn} drawn), {violations} violations; witnesses not {{+I,-I}}: {}",
            if witness_failures.is_empty() { "none".to_string() } else { witness_failures.join("; ") }
        ),
    )
}

fn determinism_run(seed: u64) -> String {
    let mut out = String::new();
    for group in [Group::Sp, Group::SO] {
        for spec in witness_specs(group) {
            out += &obstruction_report(&spec).expect("report").to_json();
        }
    }
    let w = Witness::build(&WitnessSpec::new(Group::Sp, 1, 2).expect("spec")).expect("witness");
    out += &serde_json::to_string(&specialization_agreement(&w, 20, seed).expect("specializations")).expect("json");
    let mut rng = rng(seed);
    for _ in 0..50 {
        let t: ModTuple<F5> = random_tuple(2, 2, &mut rng);
        let v = is_stable(&t, Group::GL, Method::Enumerate, BUDGET, Exec::Parallel).expect("verdict");
        out += &tuple_to_json(&t).expect("json");
        out += if v.stable { "stable\n" } else { "unstable\n" };
    }
    out
}

fn determinism() -> Outcome {
    let a = determinism_run(SEED);
    let b = determinism_run(SEED);
    outcome(a == b, format!("{} bytes, identical {}", a.len(), a == b))
}

type Criterion = (u32, &'static str, Box<dyn FnOnce() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "witness suite (Sp)", Box::new(|| timed(Some(LIMIT_SP_WITNESS), || witness_suite(Group::Sp)))),
        (2, "witness suite (SO)", Box::new(|| timed(Some(LIMIT_SO_WITNESS), || witness_suite(Group::SO)))),
        (3, "stability oracle equivalence", Box::new(|| timed(Some(LIMIT_ORACLE), oracle_equivalence))),
        (4, "eigen-subset completeness", Box::new(|| timed(None, eigen_completeness))),
        (5, "quaternion certification", Box::new(|| timed(Some(LIMIT_QUATERNION), quaternion_certification))),
        (6, "pullback class certification", Box::new(|| timed(Some(LIMIT_PULLBACK), pullback_certification))),
        (7, "stabilizer triviality", Box::new(|| timed(None, stabilizer_triviality))),
        (8, "determinism", Box::new(|| timed(None, determinism))),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let o = run();
        let known = KNOWN_FAILURES.contains(&id);
        let tag = match (o.pass, known) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
            (true, true) => "PASS (unexpected)",
        };
        println!("{tag} criterion {id}: {name}: {}", o.detail);
        if o.pass == known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected outcomes for criteria {:?}", unexpected);
        std::process::exit(1);
    }
}
