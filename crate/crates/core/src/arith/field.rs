use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gaussian::GaussianRational;

/// Exact field arithmetic. Implemented by Gaussian rationals and by rational
/// functions over any field, so `RatFunc<GaussianRational>` is Q(i)(t).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Div<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn from_gaussian(g: &GaussianRational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Coefficient fields a polynomial on the toric variety may carry: plain
/// Gaussian rationals, or rational functions of the family parameter t.
pub trait Coefficient: Field {
    /// Substitute `t = t0`. `None` when the value is undefined (pole).
    fn specialize(&self, t0: &GaussianRational) -> Option<GaussianRational>;

    /// True when the coefficient may depend on t.
    fn is_parametric() -> bool;
}

impl Coefficient for GaussianRational {
    fn specialize(&self, _t0: &GaussianRational) -> Option<GaussianRational> {
        Some(self.clone())
    }

    fn is_parametric() -> bool {
        false
    }
}
