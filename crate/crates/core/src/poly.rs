//! Sparse bivariate polynomials in `x`, `y` with exact coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};

/// Exponent pair `x^ex * y^ey`, ordered graded-lexicographically with `x > y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub ex: u32,
    pub ey: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { ex: 0, ey: 0 };

    pub fn new(ex: u32, ey: u32) -> Self {
        Mono { ex, ey }
    }

    pub fn degree(&self) -> u32 {
        self.ex + self.ey
    }

    fn mul(self, o: Mono) -> Mono {
        Mono::new(self.ex + o.ex, self.ey + o.ey)
    }

    fn divides(self, o: Mono) -> bool {
        self.ex <= o.ex && self.ey <= o.ey
    }

    fn div(self, o: Mono) -> Mono {
        Mono::new(self.ex - o.ex, self.ey - o.ey)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then(self.ex.cmp(&o.ex))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial with terms stored in strictly decreasing graded-lex order and
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: Vec<(Mono, C)>,
}

impl<C: Field> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: C, ex: u32, ey: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(Mono::new(ex, ey), c)] }
        }
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// Builds a polynomial from arbitrary terms, combining repeats and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, C)>) -> Self {
        let mut map: BTreeMap<Mono, C> = BTreeMap::new();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map)
    }

    fn from_map(map: BTreeMap<Mono, C>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    /// Constant term, or zero.
    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some((m, c)) if *m == Mono::ONE => c.clone(),
            _ => C::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(Mono, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.ex).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.ey).max()
    }

    /// Largest power of `x` dividing the polynomial.
    pub fn x_multiplicity(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.ex).min()
    }

    pub fn is_univariate_y(&self) -> bool {
        self.terms.iter().all(|t| t.0.ex == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &o.terms[j];
                    out.push((*m, if negate { c.neg() } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1;
                    let d = &o.terms[j].1;
                    let s = if negate { c.sub(d) } else { c.add(d) };
                    if !s.is_zero() {
                        out.push((self.terms[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, d.mul(c))).collect() }
    }

    fn mul_term(&self, m: Mono, c: &C) -> Self {
        Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut map: BTreeMap<Mono, C> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                let k = m.mul(*n);
                let v = c.mul(d);
                match map.get_mut(&k) {
                    Some(e) => *e = e.add(&v),
                    None => {
                        map.insert(k, v);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient, or `None` when `o` does not divide `self`.
    pub fn exact_div(&self, o: &Self) -> Option<Self> {
        let (lm, lc) = o.leading()?;
        if o.terms.len() == 1 {
            let inv = lc.inv().ok()?;
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(*m) {
                    return None;
                }
                terms.push((m.div(*lm), c.mul(&inv)));
            }
            return Some(Poly { terms });
        }
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(*lm);
            let qc = c.mul(&lc_inv);
            rem = rem.sub(&o.mul_term(qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Scales so the graded-lex leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Divides out `x^k`.
    pub fn shift_x_down(&self, k: u32) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (Mono::new(m.ex - k, m.ey), c.clone())).collect() }
    }

    /// Coefficients as a polynomial in `x` over `C[y]`, indexed by the power of `x`.
    pub fn coeffs_in_x(&self) -> Vec<Self> {
        let d = match self.deg_x() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut buckets: Vec<Vec<(Mono, C)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.ex as usize].push((Mono::new(0, m.ey), c.clone()));
        }
        // within one x-degree, graded-lex order on (0, ey) is decreasing ey, already preserved
        buckets.into_iter().map(|terms| Poly { terms }).collect()
    }

    fn from_coeffs_in_x(coeffs: &[Self]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.terms.iter().map(move |(m, c)| (Mono::new(i as u32, m.ey), c.clone()))),
        )
    }

    /// Leading coefficient in `x`, as a polynomial in `y`.
    fn lc_x(&self) -> Self {
        self.coeffs_in_x().pop().unwrap_or_else(Self::zero)
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.ey > 0)
                .map(|(m, c)| (Mono::new(m.ex, m.ey - 1), c.mul(&C::from_int(m.ey as i64)))),
        )
    }

    /// Substitutes `x = 0`.
    pub fn at_x_zero(&self) -> Self {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.ex == 0).cloned().collect() }
    }

    /// Evaluates at `(x0, y0)` after mapping coefficients into `F`.
    pub fn eval_with<F: Field>(&self, x0: &F, y0: &F, coeff: impl Fn(&C) -> Result<F>) -> Result<F> {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c)?;
            for _ in 0..m.ex {
                t = t.mul(x0);
            }
            for _ in 0..m.ey {
                t = t.mul(y0);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Monic greatest common divisor in `C[x, y]`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return Self::one();
        }
        if self.terms.len() == 1 || o.terms.len() == 1 {
            let (mono, other) = if self.terms.len() == 1 { (self, o) } else { (o, self) };
            let m = mono.terms[0].0;
            let vx = other.terms.iter().map(|(t, _)| t.ex).min().unwrap_or(0);
            let vy = other.terms.iter().map(|(t, _)| t.ey).min().unwrap_or(0);
            return Self::monomial(C::one(), m.ex.min(vx), m.ey.min(vy));
        }
        if let Some(g) = rational_gcd(self, o) {
            return g;
        }
        if self.is_univariate_y() && o.is_univariate_y() {
            return gcd_y(self, o);
        }
        if coprime_by_specialization(self, o) {
            return Self::one();
        }
        let ca = content_x(self);
        let cb = content_x(o);
        let c = gcd_y(&ca, &cb);
        let pa = self.exact_div(&ca).expect("content divides");
        let pb = o.exact_div(&cb).expect("content divides");
        let g = primitive_gcd_x(pa, pb);
        c.mul(&g).monic()
    }
}

fn rational_gcd<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Option<Poly<C>> {
    if C::characteristic() != 0 {
        return None;
    }
    let lift = |p: &Poly<C>| -> Option<Poly<Rational>> {
        let terms: Option<Vec<_>> = p.terms.iter().map(|(m, c)| Some((*m, Rational(c.to_rational()?)))).collect();
        Some(Poly::from_terms(terms?))
    };
    let g = crate::heugcd::heuristic_gcd(&lift(a)?, &lift(b)?)?;
    let terms: Option<Vec<_>> = g.terms.iter().map(|(m, c)| Some((*m, C::from_rational(&c.0).ok()?))).collect();
    Some(Poly::from_terms(terms?))
}

fn swap_xy<C: Field>(p: &Poly<C>) -> Poly<C> {
    Poly::from_terms(p.terms.iter().map(|(m, c)| (Mono::new(m.ey, m.ex), c.clone())))
}

/// Substitutes `x = x0`, leaving a polynomial in `y`.
fn subst_x<C: Field>(p: &Poly<C>, x0: &C) -> Poly<C> {
    Poly::from_terms(p.terms.iter().map(|(m, c)| {
        let mut t = c.clone();
        for _ in 0..m.ex {
            t = t.mul(x0);
        }
        (Mono::new(0, m.ey), t)
    }))
}

/// Proves `gcd(a, b) = 1` from univariate images, or gives up.
///
/// If `g` divides `a` and `x0` does not kill the leading coefficient of `a`
/// in `y`, then `deg_y g(x0, y) = deg_y g`, so a constant univariate gcd
/// bounds `deg_y g` by zero. The same with the roles of `x` and `y` swapped.
fn coprime_by_specialization<C: Field>(a: &Poly<C>, b: &Poly<C>) -> bool {
    let free_of = |a: &Poly<C>, b: &Poly<C>| {
        let dy = a.deg_y().unwrap_or(0);
        let lc =
            Poly::from_terms(a.terms.iter().filter(|(m, _)| m.ey == dy).map(|(m, c)| (Mono::new(m.ex, 0), c.clone())));
        (1..=8).map(C::from_int).filter(|v| !v.is_zero()).find(|v| !subst_x(&lc, v).is_zero()).is_some_and(|v| {
            let (ua, ub) = (subst_x(a, &v), subst_x(b, &v));
            !ua.is_zero() && !ub.is_zero() && gcd_y(&ua, &ub).is_constant()
        })
    };
    let no_y = a.deg_y() == Some(0) || b.deg_y() == Some(0) || free_of(a, b);
    no_y && (a.deg_x() == Some(0) || b.deg_x() == Some(0) || free_of(&swap_xy(a), &swap_xy(b)))
}

/// Univariate gcd in `y` by the Euclidean algorithm. Both inputs must be free of `x`.
fn gcd_y<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let mut r0 = a.monic();
    let mut r1 = b.monic();
    if r0.deg_y() < r1.deg_y() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r = rem_y(&r0, &r1);
        r0 = r1;
        r1 = r.monic();
    }
    r0.monic()
}

fn rem_y<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let (bm, bc) = b.leading().cloned().expect("nonzero divisor");
    let inv = bc.inv().expect("nonzero leading coefficient");
    let mut r = a.clone();
    while let Some((m, c)) = r.leading().cloned() {
        if m.ey < bm.ey {
            break;
        }
        r = r.sub(&b.mul_term(Mono::new(0, m.ey - bm.ey), &c.mul(&inv)));
    }
    r
}

/// Gcd over `C[y]` of the coefficients in `x`.
fn content_x<C: Field>(p: &Poly<C>) -> Poly<C> {
    let mut g = Poly::zero();
    for c in p.coeffs_in_x().iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.monic() } else { gcd_y(&g, c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part_x<C: Field>(p: &Poly<C>) -> Poly<C> {
    let c = content_x(p);
    p.exact_div(&c).expect("content divides")
}

/// Pseudo-remainder in `(C[y])[x]`.
fn prem_x<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let db = b.deg_x().unwrap_or(0);
    let lb = b.lc_x();
    let mut r = a.clone();
    while let Some(dr) = r.deg_x() {
        if dr < db || r.is_zero() {
            break;
        }
        let lr = r.lc_x();
        let shift = Poly::monomial(C::one(), dr - db, 0);
        r = lb.mul(&r).sub(&lr.mul(&shift).mul(b));
    }
    r
}

/// Gcd of two polynomials that are primitive in `x` over `C[y]`.
fn primitive_gcd_x<C: Field>(a: Poly<C>, b: Poly<C>) -> Poly<C> {
    let (mut r0, mut r1) = if a.deg_x() >= b.deg_x() { (a, b) } else { (b, a) };
    if r1.deg_x() == Some(0) {
        return Poly::one();
    }
    loop {
        let r = prem_x(&r0, &r1);
        if r.is_zero() {
            return primitive_part_x(&r1).monic();
        }
        if r.deg_x() == Some(0) {
            return Poly::one();
        }
        r0 = r1;
        r1 = primitive_part_x(&r).monic();
    }
}

impl<C: Field> Poly<C> {
    /// Rebuilds from `(C[y])[x]` coefficients; used by tests of the recursive view.
    pub fn from_x_coefficients(coeffs: &[Self]) -> Self {
        Self::from_coeffs_in_x(coeffs)
    }

    pub fn checked_exact_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.exact_div(o).ok_or_else(|| Error::Shape("inexact polynomial division".into()))
    }
}

fn write_mono(f: &mut fmt::Formatter<'_>, m: Mono) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.ex), ("y", m.ey)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", name)?;
        } else {
            write!(f, "{}^{}", name, e)?;
        }
    }
    Ok(())
}

impl<C: Field> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Mono::ONE {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write_mono(f, *m)?;
            } else {
                write!(f, "{}*", abs)?;
                write_mono(f, *m)?;
            }
        }
        Ok(())
    }
}

impl<C: Field> std::ops::Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        Poly::add(self, o)
    }
}

impl<C: Field> std::ops::Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        Poly::sub(self, o)
    }
}

impl<C: Field> std::ops::Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        Poly::mul(self, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type P = Poly<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn display_is_graded_lex() {
        let p = P::from_terms([
            (Mono::ONE, q(5)),
            (Mono::new(0, 1), Rational::new(-1, 2).unwrap()),
            (Mono::new(2, 1), q(3)),
        ]);
        assert_eq!(p.to_string(), "3*x^2*y - 1/2*y + 5");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::x().neg().add(&P::y()).to_string(), "-x + y");
    }

    #[test]
    fn exact_division_and_gcd() {
        let x = P::x();
        let y = P::y();
        let a = x.add(&y).mul(&x.sub(&y));
        let b = x.sub(&y).mul(&x.mul(&y).add(&P::one()));
        assert_eq!(a.gcd(&b), x.sub(&y));
        assert_eq!(a.exact_div(&x.sub(&y)), Some(x.add(&y)));
        assert_eq!(a.exact_div(&x), None);
        // content in y
        let c = y.add(&P::one()).mul(&x.add(&y)).mul(&y);
        let d = y.add(&P::one()).mul(&x.sub(&y)).mul(&y);
        assert_eq!(c.gcd(&d), y.mul(&y.add(&P::one())));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let x = P::x();
        let y = P::y();
        assert!(x.add(&y).gcd(&x.sub(&y)).is_one());
        assert!(x.mul(&x).sub(&y).gcd(&y.mul(&y).sub(&x)).is_one());
    }
}
