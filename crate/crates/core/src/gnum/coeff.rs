use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// An exact ordered-field scalar usable as a gross-power coefficient.
///
/// The polynomial layer only needs field arithmetic, a total order and a way
/// to surface the value as an arbitrary-precision rational (for rendering and
/// for mixing with exponential counts). Any `Ratio<T>` over a signed integer
/// type qualifies; `Ratio<i64>` is handy for fast property tests, while
/// `BigRational` is what the calculator uses.
pub trait Coeff: Clone + Ord + Hash + Debug + Num + Signed {
    fn to_rational(&self) -> BigRational;

    /// `None` when the value does not fit the target type.
    fn from_rational(r: &BigRational) -> Option<Self>;

    fn from_i64(n: i64) -> Self;
}

impl<T> Coeff for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Into<BigInt> + TryFrom<BigInt> + From<i32>,
{
    fn to_rational(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        let n = T::try_from(r.numer().clone()).ok()?;
        let d = T::try_from(r.denom().clone()).ok()?;
        Some(Ratio::new(n, d))
    }

    fn from_i64(n: i64) -> Self {
        let r = BigRational::from_integer(BigInt::from(n));
        Self::from_rational(&r).expect("i64 fits every supported coefficient type")
    }
}
