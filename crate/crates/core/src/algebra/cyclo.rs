//! The field `K(ζ)` with `ζ² = ζ − 1`, i.e. ζ a primitive sixth root of unity.
//!
//! `q = ζ²` is a primitive cube root of unity, `q^{1/2} = ζ` and `q^{-1/2} = 1 − ζ`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Domain, Field, Ring};

/// `c0 + c1·ζ` over a base field `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloScalar<T> {
    pub c0: T,
    pub c1: T,
}

impl<T: Field> CycloScalar<T> {
    pub fn new(c0: T, c1: T) -> Self {
        Self { c0, c1 }
    }

    pub fn from_base(c0: T) -> Self {
        Self { c0, c1: T::zero() }
    }

    pub fn zeta() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// `q = ζ² = ζ − 1`.
    pub fn q() -> Self {
        Self::new(-T::one(), T::one())
    }

    /// `q^{-1} = q² = −ζ`.
    pub fn q_inv() -> Self {
        Self::new(T::zero(), -T::one())
    }

    pub fn sqrt_q() -> Self {
        Self::zeta()
    }

    pub fn sqrt_q_inv() -> Self {
        Self::new(T::one(), -T::one())
    }

    /// Norm down to the base field: `c0² + c0·c1 + c1²`.
    pub fn norm(&self) -> T {
        self.c0.mul_ref(&self.c0) + self.c0.mul_ref(&self.c1) + self.c1.mul_ref(&self.c1)
    }

    pub fn is_base(&self) -> bool {
        self.c1.is_zero()
    }
}

impl<T: Field> Add for CycloScalar<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.c0 + o.c0, self.c1 + o.c1)
    }
}

impl<T: Field> Sub for CycloScalar<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.c0 - o.c0, self.c1 - o.c1)
    }
}

impl<T: Field> Neg for CycloScalar<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c0, -self.c1)
    }
}

impl<T: Field> Mul for CycloScalar<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<T: Field> Div for CycloScalar<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.checked_div(&o).expect("division by zero in cyclotomic field")
    }
}

impl<T: Field> Zero for CycloScalar<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
}

impl<T: Field> One for CycloScalar<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: Field> Ring for CycloScalar<T> {
    fn from_i64(v: i64) -> Self {
        Self::from_base(T::from_i64(v))
    }

    fn add_ref(&self, o: &Self) -> Self {
        Self::new(self.c0.add_ref(&o.c0), self.c1.add_ref(&o.c1))
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Self::new(self.c0.sub_ref(&o.c0), self.c1.sub_ref(&o.c1))
    }

    // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd(ζ − 1)
    fn mul_ref(&self, o: &Self) -> Self {
        let bd = self.c1.mul_ref(&o.c1);
        let c0 = self.c0.mul_ref(&o.c0).sub_ref(&bd);
        let c1 = self.c0.mul_ref(&o.c1) + self.c1.mul_ref(&o.c0) + bd;
        Self::new(c0, c1)
    }
}

impl<T: Field> Domain for CycloScalar<T> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }
}

impl<T: Field> Field for CycloScalar<T> {
    // (a + bζ)(a + b − bζ) = a² + ab + b²
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c0 = self.c0.add_ref(&self.c1).mul_ref(&n);
        let c1 = (-self.c1.clone()).mul_ref(&n);
        Some(Self::new(c0, c1))
    }
}

impl<T: Field> fmt::Display for CycloScalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else if self.c0.is_zero() {
            write!(f, "({})*z", self.c1)
        } else {
            write!(f, "{} + ({})*z", self.c0, self.c1)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::{ratio, Cyclo, Rational};

    use super::*;

    #[test]
    fn reduction_rule() {
        let z = Cyclo::zeta();
        assert_eq!(z.clone() * z.clone(), z.clone() - Cyclo::one());
        let q = Cyclo::q();
        assert_eq!(q.powu(3), Cyclo::one());
        assert_eq!(z.powu(6), Cyclo::one());
        let one = Cyclo::one();
        assert_eq!(
            (one.clone() + z.clone()) * (one.clone() - z.clone()),
            Cyclo::from_i64(2) - z
        );
    }

    #[test]
    fn named_constants() {
        let q = Cyclo::q();
        assert!((q.powu(2) + q.clone() + Cyclo::one()).is_zero());
        assert_eq!(q.inv().unwrap(), Cyclo::q_inv());
        assert_eq!(Cyclo::sqrt_q().powu(2), q);
        assert_eq!(Cyclo::sqrt_q() * Cyclo::sqrt_q_inv(), Cyclo::one());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Cyclo::new(ratio(3, 7), ratio(-2, 5));
        assert_eq!(a.clone() * a.inv().unwrap(), Cyclo::one());
        assert_eq!(Cyclo::zero().inv(), None);
        let b: CycloScalar<Rational> = CycloScalar::from_base(ratio(1, 3));
        assert!(b.is_base());
    }
}
