//! Exact arithmetic: Gaussian rationals, univariate and Laurent polynomials,
//! rational functions and algebraic points.

pub mod algebraic;
mod field;
mod gaussian;
mod mpoly;
mod ratfunc;
mod upoly;

pub use algebraic::AlgebraicPoint;
pub use field::{Coefficient, Field};
pub use gaussian::{GaussianRational, ParseGaussianError};
pub use mpoly::{field_pow, var_names, Exponent, MPoly};
pub use ratfunc::RatFunc;
pub use upoly::UPoly;
