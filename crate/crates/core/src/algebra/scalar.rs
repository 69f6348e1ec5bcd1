//! Scalar traits shared by every exact coefficient ring.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with exact arithmetic.
///
/// The `*_ref` methods exist so hot loops can avoid cloning; the defaults
/// fall back to the by-value operators.
pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Integral domain with exact division: `div_exact(a, b)` is `Some(c)` iff `a = b·c`.
pub trait Domain: Ring {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

pub trait Field: Domain + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;

    fn checked_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self.mul_ref(&i))
    }

    /// Integer powers, negative exponents through the inverse.
    fn powi(&self, e: i32) -> Option<Self> {
        if e >= 0 {
            Some(self.powu(e as u32))
        } else {
            self.inv().map(|i| i.powu(e.unsigned_abs()))
        }
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Domain for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Domain for BigRational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// `p/q` as a rational; panics on a zero denominator.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Converts a rational to `u64` when it is a nonnegative integer.
pub fn as_count(v: &BigRational) -> Option<u64> {
    if !v.is_integer() || v.is_negative() {
        return None;
    }
    u64::try_from(v.to_integer()).ok()
}
