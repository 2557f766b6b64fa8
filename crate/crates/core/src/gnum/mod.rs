//! Exact arithmetic and total ordering for gross-numbers.
//!
//! A gross-number is either a finite sum of rational-coefficient gross-powers
//! ([`GrossPoly`]) or an exponential count `r·b^K + t` ([`ExpCount`]) such as
//! the `10^①` numerals of an infinite-length decimal system.

mod coeff;
mod count;
mod error;
mod number;
mod poly;
pub mod render;

pub use coeff::Coeff;
pub use count::{int_log, int_pow, perfect_power, CritRef, ExpCount, ExpExponent, POWER_CAP_BITS};
pub use error::{GrossError, Result};
pub use number::{pow_count, GrossNumber};
pub use poly::{Class, GrossPoly, Term, MAX_DEPTH};

pub use crate::{Poly, Rational};
