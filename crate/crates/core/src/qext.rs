//! The quadratic extension `K = k(√x, y)` of `k(x, y)` and its conjugation.

use std::fmt;

use num_rational::BigRational;

use crate::error::Result;
use crate::field::{forward_ops, Field, Rational, Symbols};
use crate::ratfunc::RatF;

/// `re + im * s` with `s^2 = x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QExt<C> {
    pub re: RatF<C>,
    pub im: RatF<C>,
}

impl<C: Field> QExt<C> {
    pub fn new(re: RatF<C>, im: RatF<C>) -> Self {
        QExt { re, im }
    }

    pub fn from_base(re: RatF<C>) -> Self {
        QExt { re, im: RatF::zero() }
    }

    /// The square root `s` of `x`.
    pub fn s() -> Self {
        QExt { re: RatF::zero(), im: RatF::one() }
    }

    pub fn x() -> Self {
        Self::from_base(RatF::x())
    }

    pub fn y() -> Self {
        Self::from_base(RatF::y())
    }

    /// The Galois conjugation `s -> -s`, fixing `k(x, y)`.
    pub fn sigma(&self) -> Self {
        QExt { re: self.re.clone(), im: self.im.neg() }
    }

    /// Norm to `k(x, y)`: `re^2 - x * im^2`.
    pub fn norm(&self) -> RatF<C> {
        self.re.mul(&self.re).sub(&RatF::x().mul(&self.im).mul(&self.im))
    }

    pub fn is_base(&self) -> bool {
        self.im.is_zero()
    }
}

impl QExt<Rational> {
    /// Specializes at `x = s0^2`, `y = y0`, sending `s` to `s0`.
    pub fn specialize<F: Field>(&self, s0: &F, y0: &F) -> Result<F> {
        let x0 = s0.mul(s0);
        let re = self.re.specialize(&x0, y0)?;
        let im = self.im.specialize(&x0, y0)?;
        Ok(re.add(&im.mul(s0)))
    }
}

impl<C: Field> fmt::Display for QExt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*sqrt(x)", self.re, self.im)
    }
}

impl<C: Field> Field for QExt<C> {
    fn zero() -> Self {
        Self::from_base(RatF::zero())
    }
    fn one() -> Self {
        Self::from_base(RatF::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        QExt { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    fn sub(&self, o: &Self) -> Self {
        QExt { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Self::from_base(self.re.mul(&o.re));
        }
        let x = RatF::x();
        let re = self.re.mul(&o.re).add(&x.mul(&self.im.mul(&o.im)));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        QExt { re, im }
    }
    fn neg(&self) -> Self {
        QExt { re: self.re.neg(), im: self.im.neg() }
    }
    fn inv(&self) -> Result<Self> {
        // x is not a square in k(x, y), so the norm vanishes only at zero
        let n = self.norm().inv()?;
        let c = self.sigma();
        Ok(QExt { re: c.re.mul(&n), im: c.im.mul(&n) })
    }
    fn from_int(v: i64) -> Self {
        Self::from_base(RatF::from_int(v))
    }
    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(Self::from_base(RatF::from_rational(q)?))
    }
    fn characteristic() -> u64 {
        C::characteristic()
    }
    fn field_name() -> String {
        format!("{}(sqrt x,y)", C::field_name())
    }
}

impl<C: Field> Symbols for QExt<C> {
    fn var_x() -> Option<Self> {
        Some(Self::x())
    }
    fn var_y() -> Option<Self> {
        Some(Self::y())
    }
    fn sqrt_x() -> Option<Self> {
        Some(Self::s())
    }
}

forward_ops!(impl[C: Field] QExt<C>);
