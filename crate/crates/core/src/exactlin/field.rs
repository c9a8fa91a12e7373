use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field operations needed by the dense linear algebra kernels. Every
/// field contains ℚ, so rationals convert in.
///
/// The by-reference methods exist so that elimination loops over big-integer
/// coordinates do not clone every operand.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + From<BigRational>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a.mul_ref(b);
        *self = self.clone() - prod;
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The element as a rational number, if it lies in ℚ.
    fn to_rational(&self) -> Option<BigRational>;
}

impl Field for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}
