//! Exact symbolic calculator for the grossone numeral system.
//!
//! * [`gnum`]: gross-number arithmetic and ordering, including exponential
//!   counts and critical exponents.
//! * [`setmeasure`]: eventually-periodic subsets of `{1..①}` and `{-①..①}`
//!   with exact cardinalities.
//! * [`posnum`]: positional numerals with infinitely many digit positions.
//! * [`observer`]: weaker counting systems and what they can distinguish.
//! * [`oracle`]: finite substitution `① ↦ L` and brute-force checks.
//! * [`gclang`]: the expression language, evaluator and CLI plumbing.

pub mod gclang;
pub mod gnum;
pub mod observer;
pub mod oracle;
pub mod posnum;
pub mod setmeasure;

/// Exact coefficients used throughout the calculator.
pub type Rational = num_rational::BigRational;

/// Gross-polynomial over arbitrary-precision rationals.
pub type Poly = gnum::GrossPoly<Rational>;

/// Gross-polynomial over machine rationals; overflows panic, so keep it to
/// small values.
pub type SmallPoly = gnum::GrossPoly<num_rational::Ratio<i64>>;

pub use gnum::{GrossError, GrossNumber};
