use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::count::{rational_pow_q, ExpCount, ExpExponent, Normalized, POWER_CAP_BITS};
use super::error::{GrossError, Result};
use super::poly::Class;
use super::{Poly, Rational};

/// Largest integer power applied to a polynomial by repeated multiplication.
const MAX_POLY_POWER: u32 = 64;

/// An exact value of the grossone system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GrossNumber {
    P(Poly),
    E(ExpCount),
}

impl From<Poly> for GrossNumber {
    fn from(p: Poly) -> Self {
        GrossNumber::P(p)
    }
}

impl From<Normalized> for GrossNumber {
    fn from(n: Normalized) -> Self {
        match n {
            Normalized::Count(c) => GrossNumber::E(c),
            Normalized::Poly(p) => GrossNumber::P(p),
        }
    }
}

impl From<i64> for GrossNumber {
    fn from(n: i64) -> Self {
        GrossNumber::P(Poly::from_i64(n))
    }
}

impl From<Rational> for GrossNumber {
    fn from(r: Rational) -> Self {
        GrossNumber::P(Poly::constant(r))
    }
}

impl GrossNumber {
    pub fn zero() -> Self {
        GrossNumber::P(Poly::zero())
    }

    pub fn one() -> Self {
        GrossNumber::P(Poly::one())
    }

    pub fn grossone() -> Self {
        GrossNumber::P(Poly::grossone())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GrossNumber::P(p) if p.is_zero())
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            GrossNumber::P(p) => Some(p),
            GrossNumber::E(_) => None,
        }
    }

    /// The value as a rational when it is finite.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_poly().and_then(Poly::as_constant)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn classify(&self) -> Class {
        match self {
            GrossNumber::P(p) => p.classify(),
            GrossNumber::E(_) => Class::InfinitePositive,
        }
    }

    pub fn neg(&self) -> Result<Self> {
        match self {
            GrossNumber::P(p) => Ok(GrossNumber::P(p.neg())),
            GrossNumber::E(_) => Err(GrossError::UnsupportedSum(
                "exponential counts cannot be negated".into(),
            )),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        use GrossNumber::*;
        match (self, other) {
            (P(a), P(b)) => Ok(P(a.add(b))),
            (E(e), P(p)) | (P(p), E(e)) => {
                let r = p.as_constant().ok_or_else(|| {
                    GrossError::UnsupportedSum(
                        "exponential count plus a non-finite polynomial".into(),
                    )
                })?;
                Ok(E(e.with_parts(e.multiplier().clone(), e.tail() + r)))
            }
            (E(a), E(b)) if a.same_power(b) => Ok(E(a.with_parts(
                a.multiplier() + b.multiplier(),
                a.tail() + b.tail(),
            ))),
            (E(_), E(_)) => Err(GrossError::UnsupportedSum(
                "exponential counts with different powers".into(),
            )),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        use GrossNumber::*;
        match (self, other) {
            (_, P(p)) => self.add(&P(p.neg())),
            (E(a), E(b)) if a.same_power(b) => {
                let m = a.multiplier() - b.multiplier();
                let t = a.tail() - b.tail();
                match m.cmp(&Rational::zero()) {
                    Ordering::Equal => Ok(P(Poly::constant(t))),
                    Ordering::Greater => Ok(E(a.with_parts(m, t))),
                    Ordering::Less => Err(GrossError::UnsupportedSum(
                        "difference is a negative exponential count".into(),
                    )),
                }
            }
            _ => Err(GrossError::UnsupportedSum(
                "subtracting an exponential count".into(),
            )),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        use GrossNumber::*;
        match (self, other) {
            (P(a), P(b)) => Ok(P(a.mul(b))),
            (E(e), P(p)) | (P(p), E(e)) => {
                let r = p.as_constant().ok_or_else(|| {
                    GrossError::UnsupportedProduct(
                        "exponential count times a non-finite polynomial".into(),
                    )
                })?;
                scale_count(e, &r).ok_or_else(|| {
                    GrossError::UnsupportedProduct(
                        "exponential count times a negative number".into(),
                    )
                })
            }
            (E(a), E(b)) => {
                if !a.tail().is_zero() || !b.tail().is_zero() {
                    return Err(GrossError::UnsupportedProduct(
                        "exponential counts with finite tails".into(),
                    ));
                }
                match (a.exponent(), b.exponent()) {
                    (ExpExponent::Poly(x), ExpExponent::Poly(y)) if a.base() == b.base() => {
                        Ok(ExpCount::build(
                            a.multiplier() * b.multiplier(),
                            a.base(),
                            ExpExponent::Poly(x.add(y)),
                            Rational::zero(),
                        )?
                        .into())
                    }
                    _ => Err(GrossError::UnsupportedProduct(
                        "exponential counts with different bases or critical exponents".into(),
                    )),
                }
            }
        }
    }

    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        use GrossNumber::*;
        if other.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        match (self, other) {
            (P(a), P(b)) => Ok(P(a.div_exact(b)?)),
            (E(e), P(p)) => {
                let r = p.as_constant().ok_or_else(|| {
                    GrossError::NonExactDivision("count divided by a non-finite value".into())
                })?;
                scale_count(e, &r.recip()).ok_or_else(|| {
                    GrossError::NonExactDivision("quotient is a negative count".into())
                })
            }
            (P(p), E(_)) if p.is_zero() => Ok(GrossNumber::zero()),
            (P(_), E(_)) => Err(GrossError::NonExactDivision(
                "dividing by an exponential count".into(),
            )),
            (E(a), E(b)) => {
                if !a.tail().is_zero() || !b.tail().is_zero() || a.base() != b.base() {
                    return Err(GrossError::NonExactDivision(
                        "exponential counts with tails or different bases".into(),
                    ));
                }
                let ratio = a.multiplier() / b.multiplier();
                match (a.exponent(), b.exponent()) {
                    (x, y) if x == y => Ok(Rational::from(ratio).into()),
                    (ExpExponent::Poly(x), ExpExponent::Poly(y)) => ExpCount::build(
                        ratio,
                        a.base(),
                        ExpExponent::Poly(x.sub(y)),
                        Rational::zero(),
                    )
                    .map(GrossNumber::from)
                    .map_err(|e| GrossError::NonExactDivision(e.to_string())),
                    _ => Err(GrossError::NonExactDivision(
                        "mismatched critical exponents".into(),
                    )),
                }
            }
        }
    }

    /// General power `self^exp` as written in expressions.
    pub fn pow(&self, exp: &Self) -> Result<Self> {
        let GrossNumber::P(k) = exp else {
            return Err(GrossError::UnsupportedExponent(
                "exponential counts cannot be exponents".into(),
            ));
        };
        if let Some(n) = k.as_constant() {
            if n.is_integer() {
                return self.pow_int(&n.to_integer());
            }
        }
        match self {
            GrossNumber::P(base) => match base.as_constant() {
                Some(b) if b.is_one() => Ok(GrossNumber::one()),
                Some(b) if b.is_integer() && b > Rational::one() => {
                    let b = b.to_integer().to_u64().ok_or_else(|| {
                        GrossError::UnsupportedExponent("count base too large".into())
                    })?;
                    pow_count(b, &ExpExponent::Poly(k.clone()))
                }
                Some(_) => Err(GrossError::UnsupportedExponent(
                    "symbolic exponents need an integer base of at least 2".into(),
                )),
                None => Ok(GrossNumber::P(base.pow_poly(k)?)),
            },
            GrossNumber::E(_) => Err(GrossError::UnsupportedExponent(
                "exponential counts take only finite integer powers".into(),
            )),
        }
    }

    fn pow_int(&self, n: &BigInt) -> Result<Self> {
        let small = n
            .abs()
            .to_u32()
            .ok_or_else(|| GrossError::CapExceeded(format!("power {n}")))?;
        if n.is_negative() {
            return GrossNumber::one().div_exact(&self.pow_int(&BigInt::from(small))?);
        }
        match self {
            GrossNumber::P(p) => match p.as_constant() {
                Some(r) => Ok(rational_pow_q(&r, u64::from(small))?.into()),
                None if p.terms().len() == 1 => {
                    let t = &p.terms()[0];
                    let c = rational_pow_q(&t.coeff, u64::from(small))?;
                    let e = t.exp.scale(&Rational::from_integer(small.into()));
                    Ok(GrossNumber::P(Poly::monomial(c, e)?))
                }
                None if small <= MAX_POLY_POWER => Ok(GrossNumber::P(p.pow_u32(small))),
                None => Err(GrossError::CapExceeded(format!("power {n}"))),
            },
            GrossNumber::E(_) => {
                if small > MAX_POLY_POWER {
                    return Err(GrossError::CapExceeded(format!("power {n}")));
                }
                let mut acc = GrossNumber::one();
                for _ in 0..small {
                    acc = acc.mul(self)?;
                }
                Ok(acc)
            }
        }
    }

    /// Total order on the supported fragment; `Undetermined` marks the
    /// closure boundary rather than a guess.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        use GrossNumber::*;
        match (self, other) {
            (P(a), P(b)) => Ok(a.cmp(b)),
            (E(e), P(q)) => cmp_count_poly(e, q),
            (P(q), E(e)) => cmp_count_poly(e, q).map(Ordering::reverse),
            (E(a), E(b)) => cmp_counts(a, b),
        }
    }
}

fn scale_count(e: &ExpCount, r: &Rational) -> Option<GrossNumber> {
    match r.cmp(&Rational::zero()) {
        Ordering::Less => None,
        Ordering::Equal => Some(GrossNumber::zero()),
        Ordering::Greater => Some(GrossNumber::E(
            e.with_parts(e.multiplier() * r, e.tail() * r),
        )),
    }
}

/// `base^k` for a non-negative exponent.
pub fn pow_count(base: u64, k: &ExpExponent) -> Result<GrossNumber> {
    if base < 2 {
        return Err(GrossError::UnsupportedExponent(format!(
            "count base {base} must be at least 2"
        )));
    }
    if let ExpExponent::Poly(p) = k {
        match p.classify() {
            Class::FiniteNegative | Class::InfiniteNegative => {
                return Err(GrossError::NegativeExponent)
            }
            _ => {}
        }
    }
    Ok(ExpCount::build(Rational::one(), base, k.clone(), Rational::zero())?.into())
}

fn cmp_count_poly(e: &ExpCount, q: &Poly) -> Result<Ordering> {
    if q.signum() != Ordering::Greater {
        return Ok(Ordering::Greater);
    }
    match e.exponent() {
        ExpExponent::Poly(k) => dominates_poly(k, q),
        ExpExponent::Crit(_) => {
            let (lo, hi) = e.crit_bounds().ok_or_else(|| {
                GrossError::Undetermined("critical exponent of a different base".into())
            })?;
            if q >= &hi {
                Ok(Ordering::Less)
            } else if q <= &lo {
                Ok(Ordering::Greater)
            } else {
                Err(GrossError::Undetermined(
                    "value falls inside the critical sandwich".into(),
                ))
            }
        }
    }
}

/// Compares `m·b^k + t` against a positive polynomial `q` by comparing
/// `k·ln b` with `ln q ≈ e_q·ln ①`, where `ln ①` is infinite yet below
/// every `①^δ` with finite `δ > 0`.
fn dominates_poly(k: &Poly, q: &Poly) -> Result<Ordering> {
    let undetermined =
        || GrossError::Undetermined("infinitesimally small exponent gap against ln ①".into());
    let k_lead = &k.leading().expect("count exponents are infinite").exp;
    let q_exp = &q.leading().expect("q is positive").exp;
    if q_exp.classify() != Class::InfinitePositive {
        // q grows like a finite power of ①
        return if k_lead.classify() == Class::Infinitesimal {
            Err(undetermined())
        } else {
            Ok(Ordering::Greater)
        };
    }
    let q_lead = &q_exp.leading().expect("infinite").exp;
    if q_lead >= k_lead {
        return Ok(Ordering::Less);
    }
    if k_lead.sub(q_lead).classify() == Class::Infinitesimal {
        Err(undetermined())
    } else {
        Ok(Ordering::Greater)
    }
}

fn cmp_counts(a: &ExpCount, b: &ExpCount) -> Result<Ordering> {
    if a.same_power(b) {
        return Ok(a
            .multiplier()
            .cmp(b.multiplier())
            .then_with(|| a.tail().cmp(b.tail())));
    }
    match (a.exponent(), b.exponent()) {
        (ExpExponent::Poly(x), ExpExponent::Poly(y)) if a.base() == b.base() => {
            cmp_same_base(a, b, x, y)
        }
        (ExpExponent::Poly(x), ExpExponent::Poly(y)) => cmp_cross_base(a.base(), x, b.base(), y),
        (ExpExponent::Crit(_), ExpExponent::Crit(_)) => {
            let undetermined = || GrossError::Undetermined("critical sandwiches overlap".into());
            let (alo, ahi) = a.crit_bounds().ok_or_else(undetermined)?;
            let (blo, bhi) = b.crit_bounds().ok_or_else(undetermined)?;
            if ahi <= blo {
                Ok(Ordering::Less)
            } else if bhi <= alo {
                Ok(Ordering::Greater)
            } else {
                Err(undetermined())
            }
        }
        (ExpExponent::Crit(_), ExpExponent::Poly(_)) => cmp_crit_against_count(a, b),
        (ExpExponent::Poly(_), ExpExponent::Crit(_)) => {
            cmp_crit_against_count(b, a).map(Ordering::reverse)
        }
    }
}

fn cmp_same_base(a: &ExpCount, b: &ExpCount, x: &Poly, y: &Poly) -> Result<Ordering> {
    let d = x.sub(y);
    match d.classify() {
        Class::InfinitePositive => Ok(Ordering::Greater),
        Class::InfiniteNegative => Ok(Ordering::Less),
        Class::Infinitesimal => match a.multiplier().cmp(b.multiplier()) {
            Ordering::Equal
                if d.leading().map(|t| t.exp.classify()) == Some(Class::InfiniteNegative) =>
            {
                Err(GrossError::Undetermined(
                    "exponent gap too small to outweigh the finite tails".into(),
                ))
            }
            Ordering::Equal => Ok(d.signum()),
            ord => Ok(ord),
        },
        Class::Zero | Class::FinitePositive | Class::FiniteNegative => {
            // m1·base^(p/q) vs m2  ⇔  m1^q·base^p vs m2^q
            let exp = d.constant_part();
            let q = exp
                .denom()
                .to_u64()
                .ok_or_else(|| GrossError::Undetermined("exponent denominator".into()))?;
            let p = exp
                .numer()
                .to_i64()
                .ok_or_else(|| GrossError::Undetermined("exponent numerator".into()))?;
            let lhs = rational_pow_q(a.multiplier(), q)? * super::count::rational_pow(a.base(), p)?;
            let rhs = rational_pow_q(b.multiplier(), q)?;
            Ok(lhs.cmp(&rhs).then_with(|| a.tail().cmp(b.tail())))
        }
    }
}

/// Different bases: the leading terms of `x·ln b1` and `y·ln b2` decide,
/// comparing `c1·ln b1` with `c2·ln b2` through `b1^(p1·q2)` vs `b2^(p2·q1)`.
fn cmp_cross_base(b1: u64, x: &Poly, b2: u64, y: &Poly) -> Result<Ordering> {
    let tx = x.leading().expect("infinite exponent");
    let ty = y.leading().expect("infinite exponent");
    match tx.exp.cmp(&ty.exp) {
        Ordering::Equal => {}
        ord => return Ok(ord),
    }
    let too_big = || GrossError::Undetermined("cross-base powers exceed the size cap".into());
    let e1 = tx.coeff.numer() * ty.coeff.denom();
    let e2 = ty.coeff.numer() * tx.coeff.denom();
    let e1 = e1.to_u64().ok_or_else(too_big)?;
    let e2 = e2.to_u64().ok_or_else(too_big)?;
    let bits = |b: u64, e: u64| e.saturating_mul(u64::from(64 - b.leading_zeros()));
    if bits(b1, e1) > POWER_CAP_BITS || bits(b2, e2) > POWER_CAP_BITS {
        return Err(too_big());
    }
    let lhs = super::count::int_pow(b1, e1)?;
    let rhs = super::count::int_pow(b2, e2)?;
    match lhs.cmp(&rhs) {
        Ordering::Equal => Err(GrossError::Undetermined(
            "cross-base exponential tie at leading order".into(),
        )),
        ord => Ok(ord),
    }
}

fn cmp_crit_against_count(crit: &ExpCount, other: &ExpCount) -> Result<Ordering> {
    let (lo, hi) = crit
        .crit_bounds()
        .ok_or_else(|| GrossError::Undetermined("critical exponent of a different base".into()))?;
    if cmp_count_poly(other, &hi)? != Ordering::Less {
        return Ok(Ordering::Less);
    }
    if cmp_count_poly(other, &lo)? != Ordering::Greater {
        return Ok(Ordering::Greater);
    }
    Err(GrossError::Undetermined(
        "exponential count inside the critical sandwich".into(),
    ))
}
