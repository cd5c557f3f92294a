use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ArithError;

pub type Rational = BigRational;

/// Builds the rational number `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A commutative-coefficient ring, or a possibly noncommutative algebra over
/// the rationals.
///
/// Multiplication is never assumed to commute: `a.mul(b)` keeps `a` on the
/// left.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The image of a rational under the structure map.
    fn from_rational(r: &Rational) -> Self;

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&other.inv()?))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self, ArithError> {
        if Zero::is_zero(self) {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Checked 128-bit integers.
///
/// Used for evaluating integral specializations quickly. Overflow panics
/// with a clear message rather than wrapping.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Int(pub i128);

impl Int {
    fn checked(v: Option<i128>) -> Int {
        Int(v.expect("integer overflow in exact evaluation"))
    }

    pub fn to_rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self.0))
    }

    pub fn try_from_rational(r: &Rational) -> Result<Int, ArithError> {
        if !r.is_integer() {
            return Err(ArithError::Parse { what: "integer", input: r.to_string() });
        }
        i128::try_from(r.numer()).map(Int).map_err(|_| ArithError::Overflow)
    }
}

impl Ring for Int {
    fn zero() -> Self {
        Int(0)
    }
    fn one() -> Self {
        Int(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Int::checked(self.0.checked_add(other.0))
    }
    fn sub(&self, other: &Self) -> Self {
        Int::checked(self.0.checked_sub(other.0))
    }
    fn mul(&self, other: &Self) -> Self {
        Int::checked(self.0.checked_mul(other.0))
    }
    fn neg(&self) -> Self {
        Int::checked(self.0.checked_neg())
    }
    /// Panics unless `r` is an integer that fits in 128 bits.
    fn from_rational(r: &Rational) -> Self {
        Int::try_from_rational(r).expect("non-integral value in integer ring")
    }
    fn add_assign(&mut self, other: &Self) {
        *self = Ring::add(self, other);
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn from_int(n: i64) -> Self {
        Int(n as i128)
    }
}
