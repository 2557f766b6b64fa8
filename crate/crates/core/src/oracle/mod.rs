//! Finite-substitution and brute-force verification.
//!
//! Substituting a concrete integer `L` for `①` is a ring homomorphism on
//! gross-polynomials; for a set whose canonical modulus divides `L` and whose
//! exceptions lie far below `L`, the substituted cardinality must equal a
//! direct count of `{1..L}` (or `{-L..L}`) by membership.

mod enumerate;
mod setexpr;
mod sweep;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::gnum::{int_log, render, ExpExponent, GrossError, GrossNumber, POWER_CAP_BITS};
use crate::setmeasure::SetError;
use crate::{Poly, Rational};

pub use enumerate::{brute_float_count, brute_numeral_count, brute_signed_count};
pub use setexpr::SetExpr;
pub use sweep::{random_set_expr, sweep, valid_ls, CaseReport, SweepReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exponent {0} does not substitute to an integer")]
    NonIntegerExponent(String),
    #[error("substituted value exceeds {0} bits")]
    ExponentTooLarge(u64),
    #[error("critical exponent not substitutable: {0}")]
    CritRefNotSubstitutable(String),
    #[error("invalid L: {0}")]
    InvalidL(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Gross(#[from] GrossError),
}

/// Value of `x` under `① ↦ l`.
pub fn subst(x: &GrossNumber, l: &BigInt) -> Result<Rational, OracleError> {
    match x {
        GrossNumber::P(p) => subst_poly(p, l),
        GrossNumber::E(e) => {
            let k = match e.exponent() {
                ExpExponent::Poly(p) => integer_exponent(p, l)?,
                ExpExponent::Crit(c) => {
                    let m = subst_poly(c.target(), l)?;
                    if !m.is_integer() || m < Rational::one() {
                        return Err(OracleError::CritRefNotSubstitutable(render::crit(c)));
                    }
                    let k = int_log(&BigInt::from(c.base()), &m.to_integer());
                    BigInt::from(k) + c.offset()
                }
            };
            let power = checked_pow(&Rational::from_integer(BigInt::from(e.base())), &k)?;
            Ok(e.multiplier() * power + e.tail())
        }
    }
}

pub fn subst_poly(p: &Poly, l: &BigInt) -> Result<Rational, OracleError> {
    let base = Rational::from_integer(l.clone());
    let mut acc = Rational::zero();
    for t in p.terms() {
        let k = integer_exponent(&t.exp, l)?;
        acc += &t.coeff * checked_pow(&base, &k)?;
    }
    Ok(acc)
}

fn integer_exponent(e: &Poly, l: &BigInt) -> Result<BigInt, OracleError> {
    let v = subst_poly(e, l)?;
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(OracleError::NonIntegerExponent(render::poly(e)))
    }
}

fn checked_pow(base: &Rational, k: &BigInt) -> Result<Rational, OracleError> {
    let bits = base.numer().bits().max(base.denom().bits()).max(1);
    let n = k
        .abs()
        .to_u64()
        .filter(|n| n.saturating_mul(bits) <= POWER_CAP_BITS)
        .ok_or(OracleError::ExponentTooLarge(POWER_CAP_BITS))?;
    let mag = num_traits::pow(base.clone(), n as usize);
    if k.is_negative() {
        Ok(mag.recip())
    } else {
        Ok(mag)
    }
}

/// Outcome of a substitution check: the symbolic value at `l` against an
/// independent ground truth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstReport {
    pub expression: String,
    pub l: BigInt,
    pub symbolic: Rational,
    pub brute: Rational,
    pub matched: bool,
}

/// Counts members of `expr` in `1..=l` (or `-l..=l` for signed
/// expressions) by evaluating the expression tree's membership predicate.
pub fn brute_count(expr: &SetExpr, l: u64) -> u64 {
    let l = l as i64;
    let lo = if expr.is_signed() { -l } else { 1 };
    (lo..=l).filter(|&k| expr.contains(k)).count() as u64
}

/// `subst(card(expr), l)` against [`brute_count`].
pub fn check_card(expr: &SetExpr, l: u64) -> Result<SubstReport, OracleError> {
    let set = expr.build()?;
    if l == 0 {
        return Err(OracleError::InvalidL("L must be positive".into()));
    }
    if let Some(d) = set.moduli().into_iter().find(|&d| !l.is_multiple_of(d)) {
        return Err(OracleError::InvalidL(format!("{l} is not divisible by modulus {d}")));
    }
    let max_exc = set.max_exception();
    if u128::from(l) <= 10 * u128::from(max_exc) {
        return Err(OracleError::InvalidL(format!(
            "{l} does not exceed 10 x largest exception {max_exc}"
        )));
    }
    let big_l = BigInt::from(l);
    let symbolic = subst_poly(&set.card(), &big_l)?;
    let brute = Rational::from_integer(brute_count(expr, l).into());
    Ok(SubstReport {
        expression: expr.to_string(),
        l: big_l,
        matched: symbolic == brute,
        symbolic,
        brute,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub verdict: Ordering,
    /// `(L, sign of subst(x) − subst(y))` for every substitutable `L`.
    pub samples: Vec<(BigInt, Ordering)>,
    pub matched: bool,
}

/// Checks `compare(x, y)` against the sign of the substituted difference.
pub fn check_order(
    x: &GrossNumber,
    y: &GrossNumber,
    ls: &[BigInt],
) -> Result<OrderReport, OracleError> {
    let verdict = x.compare(y)?;
    let samples: Vec<(BigInt, Ordering)> = ls
        .iter()
        .filter_map(|l| match (subst(x, l), subst(y, l)) {
            (Ok(a), Ok(b)) => Some((l.clone(), a.cmp(&b))),
            _ => None,
        })
        .collect();
    let matched = !samples.is_empty() && samples.iter().all(|(_, o)| *o == verdict);
    Ok(OrderReport {
        verdict,
        samples,
        matched,
    })
}
