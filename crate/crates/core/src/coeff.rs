//! The coefficient abstraction shared by every algebra in the crate.
//!
//! Elements are exact linear combinations, so a coefficient type has to be an
//! exact field-like ring: equality must be decidable and nonzero values must
//! (usually) be invertible. Floating point types deliberately do not implement
//! [`Coefficient`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero (or a non-unit).
    fn try_inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self;

    /// Ratio `num/den`; `None` when `den` is zero.
    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_int(den).try_inv().map(|inv| Self::from_int(num) * inv)
    }

    /// True when the value does not depend on the indeterminate `q`.
    fn is_q_free(&self) -> bool {
        true
    }

    /// Printing hint: the value prints with a leading minus sign.
    fn looks_negative(&self) -> bool {
        false
    }

    /// Printing hint: the value prints as a single factor, so it can be
    /// juxtaposed with a word without parentheses.
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Coefficient for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn looks_negative(&self) -> bool {
        self < &BigRational::zero()
    }
}

impl Coefficient for Rational64 {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn looks_negative(&self) -> bool {
        *self.numer() < 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_inverse() {
        let two = BigRational::from_int(2);
        assert_eq!(two.try_inv().unwrap() * two, BigRational::one());
        assert!(BigRational::zero().try_inv().is_none());
        assert_eq!(
            Rational64::from_ratio(6, 4).unwrap(),
            Rational64::new(3, 2)
        );
        assert!(Rational64::from_ratio(1, 0).is_none());
    }
}
