use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::{Coefficient, Field};
use super::gaussian::GaussianRational;
use super::upoly::UPoly;

/// Rational function `num/den` over a field, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F: Field> {
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self { num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let lc = d.lc().inv();
        Self { num: n.scale(&lc), den: d.scale(&lc) }
    }

    pub fn from_poly(p: UPoly<F>) -> Self {
        Self { num: p, den: UPoly::one() }
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::from_poly(UPoly::x())
    }

    pub fn num(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den);
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { num: self.num.neg(), den: self.den }
    }
}

impl<F: Field> Div for RatFunc<F> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(!o.num.is_zero(), "division by zero rational function");
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        Self::from_poly(UPoly::constant(F::from_i64(v)))
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        Self::from_poly(UPoly::constant(F::from_gaussian(g)))
    }
}

impl Coefficient for RatFunc<GaussianRational> {
    fn specialize(&self, t0: &GaussianRational) -> Option<GaussianRational> {
        self.eval(t0)
    }

    fn is_parametric() -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = RatFunc<GaussianRational>;

    #[test]
    fn reduces_common_factors() {
        let t = Q::var();
        let one = Q::one();
        let a = (t.clone() * t.clone() - one.clone()) / (t.clone() - one.clone());
        assert_eq!(a, t + one);
        assert!(a.is_polynomial());
    }

    #[test]
    fn specialization_and_poles() {
        let t = Q::var();
        let f = Q::one() / t;
        assert_eq!(f.specialize(&GaussianRational::from_i64(2)), Some(GaussianRational::from_ratio(1, 2)));
        assert_eq!(f.specialize(&GaussianRational::zero()), None);
    }
}
