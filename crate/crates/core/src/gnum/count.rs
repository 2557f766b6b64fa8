//! Exponential counts `r·b^K + t`: a finite base raised to an infinite
//! exponent, which no finite sum of gross-powers can express.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::error::{GrossError, Result};
use super::poly::Class;
use super::{Poly, Rational};

/// Bit budget for any exact power built while normalizing counts.
pub const POWER_CAP_BITS: u64 = 1_000_000;

/// Symbolic critical exponent `[log_base target] + offset`.
///
/// Nothing is known about it except `base^k ≤ target < base^(k+1)`, which is
/// strict on the left as well for the integer-valued targets accepted here:
/// such a target is congruent to its finite constant part modulo every finite
/// integer, so it can never be an exact power of `base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CritRef {
    base: u64,
    target: Poly,
    offset: i64,
}

impl CritRef {
    pub fn new(base: u64, target: Poly, offset: i64) -> Result<Self> {
        if base < 2 {
            return Err(GrossError::UnsupportedExponent(format!(
                "critical base {base} must be at least 2"
            )));
        }
        if target.classify() != Class::InfinitePositive {
            return Err(GrossError::NotInfinite(super::render::poly(&target)));
        }
        if !target.is_integer_valued() {
            return Err(GrossError::NotInteger(super::render::poly(&target)));
        }
        Ok(CritRef {
            base,
            target,
            offset,
        })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn target(&self) -> &Poly {
        &self.target
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn with_offset(&self, offset: i64) -> Self {
        CritRef {
            offset,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExpExponent {
    Poly(Poly),
    Crit(CritRef),
}

/// `multiplier · base^exponent + tail`.
///
/// Canonical form: `multiplier > 0`; for polynomial exponents the base is
/// not a perfect power and the exponent's constant part lies in `[0, 1)`;
/// for critical exponents the offset is folded into the multiplier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpCount {
    multiplier: Rational,
    base: u64,
    exponent: ExpExponent,
    tail: Rational,
}

/// Either a canonical count or the plain polynomial it collapsed to.
pub(crate) enum Normalized {
    Count(ExpCount),
    Poly(Poly),
}

impl ExpCount {
    pub fn multiplier(&self) -> &Rational {
        &self.multiplier
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn exponent(&self) -> &ExpExponent {
        &self.exponent
    }

    pub fn tail(&self) -> &Rational {
        &self.tail
    }

    /// Same base and exponent, so the two differ only in multiplier and tail.
    pub fn same_power(&self, other: &ExpCount) -> bool {
        self.base == other.base && self.exponent == other.exponent
    }

    pub(crate) fn with_parts(&self, multiplier: Rational, tail: Rational) -> ExpCount {
        ExpCount {
            multiplier,
            tail,
            ..self.clone()
        }
    }

    /// Normalizes `multiplier · base^exponent + tail`.
    ///
    /// `multiplier` must be positive; a finite integer polynomial exponent
    /// collapses to an ordinary number.
    pub(crate) fn build(
        multiplier: Rational,
        base: u64,
        exponent: ExpExponent,
        tail: Rational,
    ) -> Result<Normalized> {
        if base < 2 {
            return Err(GrossError::UnsupportedExponent(format!(
                "count base {base} must be at least 2"
            )));
        }
        if multiplier.is_zero() {
            return Ok(Normalized::Poly(Poly::constant(tail)));
        }
        debug_assert!(multiplier.is_positive());
        match exponent {
            ExpExponent::Crit(crit) => {
                let scale = rational_pow(base, crit.offset)?;
                Ok(Normalized::Count(ExpCount {
                    multiplier: multiplier * scale,
                    base,
                    exponent: ExpExponent::Crit(crit.with_offset(0)),
                    tail,
                }))
            }
            ExpExponent::Poly(p) => {
                let (root, power) = perfect_power(base);
                let p = p.scale(&Rational::from_integer(BigInt::from(power)));
                match p.classify() {
                    Class::InfinitePositive => {
                        let c = p.constant_part();
                        let whole = c.floor();
                        let shift = whole
                            .to_integer()
                            .to_i64()
                            .ok_or_else(|| GrossError::CapExceeded("exponent offset".into()))?;
                        let scale = rational_pow(root, shift)?;
                        let p = p.sub(&Poly::constant(whole));
                        Ok(Normalized::Count(ExpCount {
                            multiplier: multiplier * scale,
                            base: root,
                            exponent: ExpExponent::Poly(p),
                            tail,
                        }))
                    }
                    Class::Zero | Class::FinitePositive | Class::FiniteNegative => {
                        let c = p.constant_part();
                        if !c.is_integer() {
                            return Err(GrossError::UnsupportedExponent(format!(
                                "{base}^{} is irrational",
                                super::render::rational(&c)
                            )));
                        }
                        let n = c
                            .to_integer()
                            .to_i64()
                            .ok_or_else(|| GrossError::CapExceeded("exponent".into()))?;
                        let v = multiplier * rational_pow(root, n)? + tail;
                        Ok(Normalized::Poly(Poly::constant(v)))
                    }
                    Class::InfiniteNegative => Err(GrossError::UnsupportedExponent(
                        "negative infinite exponents give infinitesimals".into(),
                    )),
                    Class::Infinitesimal => Err(GrossError::UnsupportedExponent(
                        "infinitesimal exponents give irrational values".into(),
                    )),
                }
            }
        }
    }

    /// Strict polynomial bounds `(lo, hi)` with `lo < self < hi`, available
    /// when the exponent is a critical value of the count's own base.
    pub fn crit_bounds(&self) -> Option<(Poly, Poly)> {
        let ExpExponent::Crit(crit) = &self.exponent else {
            return None;
        };
        if crit.base != self.base {
            return None;
        }
        let tail = Poly::constant(self.tail.clone());
        let hi = crit.target.scale(&self.multiplier).add(&tail);
        let lo_scale = &self.multiplier / Rational::from_integer(BigInt::from(self.base));
        let lo = crit.target.scale(&lo_scale).add(&tail);
        Some((lo, hi))
    }
}

/// `base^n` as an exact rational (negative `n` allowed), under the bit cap.
pub fn rational_pow(base: u64, n: i64) -> Result<Rational> {
    let mag = int_pow(base, n.unsigned_abs())?;
    if n >= 0 {
        Ok(Rational::from_integer(mag))
    } else {
        Ok(Rational::new(BigInt::one(), mag))
    }
}

pub fn int_pow(base: u64, n: u64) -> Result<BigInt> {
    let bits = u64::from(64 - base.leading_zeros());
    if n.saturating_mul(bits) > POWER_CAP_BITS {
        return Err(GrossError::CapExceeded(format!("{base}^{n}")));
    }
    let n = u32::try_from(n).map_err(|_| GrossError::CapExceeded(format!("{base}^{n}")))?;
    Ok(num_traits::pow(BigInt::from(base), n as usize))
}

/// Exact power of a rational, bounded by the bit cap.
pub fn rational_pow_q(x: &BigRational, n: u64) -> Result<BigRational> {
    let bits = x.numer().bits().max(x.denom().bits());
    if n.saturating_mul(bits) > POWER_CAP_BITS {
        return Err(GrossError::CapExceeded("rational power".into()));
    }
    Ok(num_traits::pow(x.clone(), n as usize))
}

/// Writes `b = root^power` with `root` not itself a perfect power.
pub fn perfect_power(b: u64) -> (u64, u64) {
    let max_k = 63 - b.leading_zeros() as u64;
    for k in (2..=max_k).rev() {
        if let Some(r) = exact_root(b, k as u32) {
            let (rr, kk) = perfect_power(r);
            return (rr, kk * k);
        }
    }
    (b, 1)
}

fn exact_root(b: u64, k: u32) -> Option<u64> {
    let (mut lo, mut hi) = (1u64, b);
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match mid.checked_pow(k).map(|v| v.cmp(&b)) {
            Some(Ordering::Equal) => return Some(mid),
            Some(Ordering::Less) => lo = mid + 1,
            _ => hi = mid - 1,
        }
    }
    None
}

/// Floor of `log_base(n)` for a positive integer `n`.
pub fn int_log(base: &BigInt, n: &BigInt) -> u64 {
    let mut k = 0;
    let mut acc = base.clone();
    while &acc <= n {
        acc *= base;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_powers() {
        assert_eq!(perfect_power(2), (2, 1));
        assert_eq!(perfect_power(4), (2, 2));
        assert_eq!(perfect_power(8), (2, 3));
        assert_eq!(perfect_power(64), (2, 6));
        assert_eq!(perfect_power(10), (10, 1));
        assert_eq!(perfect_power(100), (10, 2));
        assert_eq!(perfect_power(36), (6, 2));
    }

    #[test]
    fn integer_log() {
        let ten = BigInt::from(10);
        assert_eq!(int_log(&ten, &BigInt::from(27720)), 4);
        assert_eq!(int_log(&ten, &BigInt::from(10000)), 4);
        assert_eq!(int_log(&ten, &BigInt::from(9999)), 3);
        assert_eq!(int_log(&ten, &BigInt::from(1)), 0);
    }

    #[test]
    fn power_cap() {
        assert!(int_pow(2, 400_000).is_ok());
        assert!(matches!(int_pow(3, 1_000_000), Err(GrossError::CapExceeded(_))));
    }
}
