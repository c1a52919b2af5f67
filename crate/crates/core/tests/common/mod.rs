#![allow(dead_code)]

use brauer_witness::poly::Mono;
use brauer_witness::{Field, Fp, Poly, QExt, RatF, Rational};
use proptest::prelude::*;

pub type F5 = Fp<5>;
pub type P = Poly<Rational>;
pub type L = RatF<Rational>;
pub type K = QExt<Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn fp5() -> impl Strategy<Value = F5> {
    (0i64..5).prop_map(F5::new)
}

pub fn poly_with(max_terms: usize, max_exp: u32) -> impl Strategy<Value = P> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, -4i64..=4), 0..=max_terms)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(a, b, c)| (Mono::new(a, b), q(c)))))
}

pub fn poly() -> impl Strategy<Value = P> {
    poly_with(3, 2)
}

pub fn nonzero_poly() -> impl Strategy<Value = P> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratf() -> impl Strategy<Value = L> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatF::new(n, d).unwrap())
}

pub fn nonzero_ratf() -> impl Strategy<Value = L> {
    ratf().prop_filter("nonzero", |f| !f.is_zero())
}

pub fn qext() -> impl Strategy<Value = K> {
    (poly_with(2, 1), poly_with(2, 1), (1i64..=3).prop_map(q))
        .prop_map(|(a, b, c)| QExt::new(RatF::from_poly(a), RatF::from_poly(b).div(&RatF::constant(c)).unwrap()))
}

/// `a/b == c/d` checked by cross multiplication, independent of reduction.
pub fn same_fraction(f: &L, g: &L) -> bool {
    f.numer().mul(g.denom()) == g.numer().mul(f.denom())
}
