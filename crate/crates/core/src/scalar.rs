//! The scalar abstraction shared by the whole engine.
//!
//! Every numeric value is either an arbitrary-precision rational or an
//! element of an algebraic extension tower ([`crate::tower::TowerElem`]).
//! Algorithms are generic over [`Scalar`] so they run unchanged over both;
//! division is fallible because tower arithmetic may discover a zero divisor
//! and demand a branch split.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::tower::SplitEvent;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (the representation `num-rational` maintains).
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Field operations of the exact scalar domain.
///
/// `inv` and `div` return a [`SplitEvent`] when a zero divisor in an
/// extension tower forces dynamic splitting; over plain rationals they never
/// fail. Inverting exact zero is a caller bug and panics.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Sized + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rat(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Result<Self, SplitEvent>;

    fn div(&self, rhs: &Self) -> Result<Self, SplitEvent> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// The rational value, if the scalar happens to be rational.
    fn to_rat(&self) -> Option<Rational>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::from_integer(BigInt::zero())
    }

    fn one() -> Self {
        Rational::from_integer(BigInt::one())
    }

    fn from_int(n: i64) -> Self {
        rat_int(n)
    }

    fn from_rat(r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn neg(&self) -> Self {
        -self
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Result<Self, SplitEvent> {
        assert!(!Zero::is_zero(self), "inverting exact zero");
        Ok(self.recip())
    }

    fn to_rat(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Renders a rational as a leading sign plus magnitude, for pretty printers.
pub fn signed_parts(r: &Rational) -> (bool, String) {
    if r.is_negative() {
        (true, (-r).to_string())
    } else {
        (false, r.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let a = rat(2, 4);
        assert_eq!(a, rat(1, 2));
        assert_eq!(a.numer(), &BigInt::from(1));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = rat(3, -6);
        assert_eq!(b.denom(), &BigInt::from(2));
        assert_eq!(b.numer(), &BigInt::from(-1));
        assert_eq!(<Rational as Scalar>::zero(), rat(0, 5));
    }

    #[test]
    fn field_ops() {
        let a = rat(3, 4);
        let b = rat(-2, 5);
        assert_eq!(a.add(&b), rat(7, 20));
        assert_eq!(a.mul(&b), rat(-3, 10));
        assert_eq!(a.inv().unwrap(), rat(4, 3));
        assert_eq!(a.div(&b).unwrap(), rat(-15, 8));
    }

    #[test]
    #[should_panic(expected = "inverting exact zero")]
    fn zero_inverse_panics() {
        let _ = rat(0, 1).inv();
    }
}
