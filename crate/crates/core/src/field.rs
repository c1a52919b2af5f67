//! Coefficient fields: the [`Field`] trait, exact rationals and prime fields.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact field with context-free constants.
///
/// Every element type used by the matrix and stability layers implements this.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(v: i64) -> Self;

    /// Image of a rational number; fails when the denominator is not invertible.
    fn from_rational(q: &BigRational) -> Result<Self>;

    /// The element as a rational number, for characteristic-zero prime fields.
    fn to_rational(&self) -> Option<BigRational> {
        None
    }

    fn characteristic() -> u64;

    /// Splits off a sign for pretty printing. Only ordered fields report negatives.
    fn is_negative(&self) -> bool {
        false
    }

    /// Short name used in serialized tuple files.
    fn field_name() -> String;

    /// Every element, for finite fields; `None` otherwise.
    fn all_elements() -> Option<Vec<Self>> {
        None
    }
}

/// Fields with finitely many elements, enumerable in a fixed order.
pub trait FiniteField: Field {
    fn order() -> u64;
    fn elements() -> Vec<Self>;
}

/// Access to the symbols `x`, `y` and `sqrt(x)` for the text parser.
pub trait Symbols: Field {
    fn var_x() -> Option<Self> {
        None
    }
    fn var_y() -> Option<Self> {
        None
    }
    fn sqrt_x() -> Option<Self> {
        None
    }
}

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }
    fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(Rational(q.clone()))
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }
    fn characteristic() -> u64 {
        0
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
    fn field_name() -> String {
        "Q".to_string()
    }
}

impl Symbols for Rational {}

/// Residue class modulo the prime `P`, stored as its representative in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let p = P as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % P as u64) as u32)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - o.0 as u64) % P as u64) as u32)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Result<Self> {
        if self.0 == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.pow(P as u64 - 2))
        }
    }
    fn from_int(v: i64) -> Self {
        Fp::new(v)
    }
    fn from_rational(q: &BigRational) -> Result<Self> {
        let p = BigInt::from(P);
        let n = q.numer().mod_floor(&p).to_i64().unwrap_or(0);
        let d = q.denom().mod_floor(&p).to_i64().unwrap_or(0);
        if d == 0 {
            return Err(Error::NotRepresentable(format!("{} mod {}", q, P)));
        }
        Fp::new(n).div(&Fp::new(d))
    }
    fn characteristic() -> u64 {
        P as u64
    }
    fn field_name() -> String {
        format!("Fp:{}", P)
    }
    fn all_elements() -> Option<Vec<Self>> {
        Some(<Self as FiniteField>::elements())
    }
}

impl<const P: u32> FiniteField for Fp<P> {
    fn order() -> u64 {
        P as u64
    }
    fn elements() -> Vec<Self> {
        (0..P).map(Fp).collect()
    }
}

impl<const P: u32> Symbols for Fp<P> {}

/// Forwards `std::ops` operators to the [`Field`] methods.
macro_rules! forward_ops {
    (impl[$($gen:tt)*] $ty:ty) => {
        impl<$($gen)*> std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, o: $ty) -> $ty { $crate::field::Field::add(&self, &o) }
        }
        impl<'a, $($gen)*> std::ops::Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, o: &'a $ty) -> $ty { $crate::field::Field::add(self, o) }
        }
        impl<$($gen)*> std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, o: $ty) -> $ty { $crate::field::Field::sub(&self, &o) }
        }
        impl<'a, $($gen)*> std::ops::Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, o: &'a $ty) -> $ty { $crate::field::Field::sub(self, o) }
        }
        impl<$($gen)*> std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, o: $ty) -> $ty { $crate::field::Field::mul(&self, &o) }
        }
        impl<'a, $($gen)*> std::ops::Mul<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn mul(self, o: &'a $ty) -> $ty { $crate::field::Field::mul(self, o) }
        }
        impl<$($gen)*> std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty { $crate::field::Field::neg(&self) }
        }
        impl<'a, $($gen)*> std::ops::Neg for &'a $ty {
            type Output = $ty;
            fn neg(self) -> $ty { $crate::field::Field::neg(self) }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(impl[] Rational);
forward_ops!(impl[const P: u32] Fp<P>);
