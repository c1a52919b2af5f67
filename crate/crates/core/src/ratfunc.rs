//! The rational function field `k(x, y)`.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{forward_ops, Field, Rational, Symbols};
use crate::poly::Poly;

/// Reduced fraction of polynomials. The denominator is nonzero with graded-lex
/// leading coefficient one, and shares no factor with the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatF<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Field> RatF<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        if den.is_constant() {
            let c = den.leading_coeff().inv()?;
            return Ok(RatF { num: num.scale(&c), den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff().inv()?;
        Ok(RatF { num: num.scale(&lc), den: den.scale(&lc) })
    }

    /// Scales a coprime pair so the denominator is monic.
    fn normalized(num: Poly<C>, den: Poly<C>) -> Self {
        let lc = den.leading_coeff().inv().expect("nonzero denominator");
        RatF { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatF { num: p, den: Poly::one() }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn y() -> Self {
        Self::from_poly(Poly::y())
    }

    pub fn numer(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    /// True when neither numerator nor denominator involves `x`.
    pub fn is_univariate_y(&self) -> bool {
        self.num.is_univariate_y() && self.den.is_univariate_y()
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RatF { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Evaluates at `(x0, y0)`. The fraction is already reduced, so removable
    /// singularities of the unreduced input have disappeared.
    pub fn eval_with<F: Field>(&self, x0: &F, y0: &F, coeff: impl Fn(&C) -> Result<F> + Copy) -> Result<F> {
        let d = self.den.eval_with(x0, y0, coeff)?;
        if d.is_zero() {
            return Err(Error::Pole { x: x0.to_string(), y: y0.to_string() });
        }
        self.num.eval_with(x0, y0, coeff)?.div(&d)
    }

    /// x-adic valuation and the leading coefficient of the x-adic expansion,
    /// an element of `k(y)`.
    pub fn val_x(&self) -> Result<(i64, RatF<C>)> {
        if self.num.is_zero() {
            return Err(Error::UndefinedValuation);
        }
        let a = self.num.x_multiplicity().unwrap_or(0);
        let b = self.den.x_multiplicity().unwrap_or(0);
        let n0 = self.num.shift_x_down(a).at_x_zero();
        let d0 = self.den.shift_x_down(b).at_x_zero();
        Ok((a as i64 - b as i64, RatF::new(n0, d0)?))
    }
}

impl RatF<Rational> {
    /// Evaluation homomorphism `k(x,y) -> F` at `(x0, y0)`.
    pub fn specialize<F: Field>(&self, x0: &F, y0: &F) -> Result<F> {
        self.eval_with(x0, y0, |c: &Rational| F::from_rational(&c.0))
    }

    pub fn from_big(q: &BigRational) -> Self {
        Self::constant(Rational(q.clone()))
    }
}

impl<C: Field> fmt::Display for RatF<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<C: Field> Field for RatF<C> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return RatF::new(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return RatF::normalized(num, self.den.mul(&o.den));
        }
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = o.den.exact_div(&g).expect("gcd divides");
        let t = self.num.mul(&d).add(&o.num.mul(&b));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = t.gcd(&g);
        let t = t.exact_div(&g2).expect("gcd divides");
        let d = o.den.exact_div(&g2).expect("gcd divides");
        RatF::normalized(t, b.mul(&d))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = o.den.exact_div(&g1).expect("gcd divides");
        let c = o.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        let num = a.mul(&c);
        let den = b.mul(&d);
        let lc = den.leading_coeff().inv().expect("nonzero denominator");
        RatF { num: num.scale(&lc), den: den.scale(&lc) }
    }
    fn neg(&self) -> Self {
        RatF { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading_coeff().inv()?;
        Ok(RatF { num: self.den.scale(&lc), den: self.num.scale(&lc) })
    }
    fn from_int(v: i64) -> Self {
        Self::constant(C::from_int(v))
    }
    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(Self::constant(C::from_rational(q)?))
    }
    fn characteristic() -> u64 {
        C::characteristic()
    }
    fn field_name() -> String {
        format!("{}(x,y)", C::field_name())
    }
}

impl<C: Field> Symbols for RatF<C> {
    fn var_x() -> Option<Self> {
        Some(Self::x())
    }
    fn var_y() -> Option<Self> {
        Some(Self::y())
    }
}

forward_ops!(impl[C: Field] RatF<C>);

/// True iff the nonzero polynomial `f(y)` is a square in `k̄(y)`: every
/// irreducible factor occurs to an even power. Computed from the squarefree
/// decomposition, so it is valid in characteristic zero.
pub fn is_square_geometric(f: &Poly<Rational>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroInput("is_square_geometric"));
    }
    if !f.is_univariate_y() {
        return Err(Error::Shape("expected a polynomial in y".into()));
    }
    Ok(squarefree_decomposition(f).iter().enumerate().all(|(i, g)| (i + 1) % 2 == 0 || g.is_constant()))
}

/// Yun's algorithm: returns `[a1, a2, ...]` with `f = c * a1 * a2^2 * a3^3 ...`,
/// each `ai` monic and squarefree. Requires characteristic zero.
pub fn squarefree_decomposition(f: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let f = f.monic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative_y();
    let mut a = f.gcd(&df);
    let mut b = f.exact_div(&a).expect("gcd divides");
    let mut c = df.exact_div(&a).expect("gcd divides");
    let mut d = c.sub(&b.derivative_y());
    let mut out = Vec::new();
    loop {
        a = b.gcd(&d);
        out.push(a.clone());
        b = b.exact_div(&a).expect("gcd divides");
        if b.is_constant() {
            break;
        }
        c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&b.derivative_y());
    }
    while out.last().is_some_and(|p| p.is_constant()) {
        out.pop();
    }
    out
}
