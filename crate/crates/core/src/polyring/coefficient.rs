use std::fmt::{Debug, Display};
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient ring for [`SparsePoly`](super::SparsePoly).
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn mul_ref(&self, other: &Self) -> Self;

    /// Multiplicative inverse when it exists in the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    fn is_negative(&self) -> bool;

    /// Parse the decimal form used by the polynomial JSON format.
    fn parse_decimal(s: &str) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl Coefficient for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}
