//! Positional numeral systems with infinitely many digit positions.
//!
//! A numeral `0.a1 a2 … ak` whose length `k` may be infinite (`①`, `①/2`,
//! …) is stored sparsely: finitely many digits from the front, finitely many
//! at the back, and an all-zero run in between. Finite-length numerals are
//! stored as one explicit digit string.

use std::cmp::Ordering;
use std::fmt;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::gnum::{pow_count, render, Class, CritRef, ExpExponent, GrossError, GrossNumber};
use crate::Poly;

/// Longest finite length stored digit by digit.
pub const MAX_FINITE_LENGTH: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumeralError {
    #[error("base {0} outside 2..=36")]
    InvalidBase(u64),
    #[error("digit {digit} is not valid in base {base}")]
    InvalidDigit { digit: char, base: u32 },
    #[error("invalid length {0}: need a positive integer")]
    InvalidLength(String),
    #[error("{given} digits do not fit into {length} positions")]
    Overlap { given: usize, length: usize },
    #[error("numerals from different systems cannot be compared")]
    IncomparableSystems,
    #[error("the maximal numeral has no successor")]
    Overflow,
    #[error("the minimal numeral has no predecessor")]
    Underflow,
    #[error("result would need infinitely many nonzero digits")]
    Unrepresentable,
    #[error(transparent)]
    Gross(#[from] GrossError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Unsigned,
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Digits {
    /// All `n` digits, trailing zeros stripped.
    Finite { n: usize, digits: Vec<u8> },
    /// Head (trailing zeros stripped), infinite zero run, tail (leading
    /// zeros stripped).
    Infinite { head: Vec<u8>, tail: Vec<u8> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfNumeral {
    base: u32,
    length: Poly,
    sign: Sign,
    digits: Digits,
}

fn strip_trailing(mut v: Vec<u8>) -> Vec<u8> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn strip_leading(v: Vec<u8>) -> Vec<u8> {
    let skip = v.iter().take_while(|d| **d == 0).count();
    v[skip..].to_vec()
}

pub fn parse_digits(s: &str, base: u32) -> Result<Vec<u8>, NumeralError> {
    s.chars()
        .map(|c| match c.to_digit(base) {
            Some(d) => Ok(d as u8),
            None => Err(NumeralError::InvalidDigit { digit: c, base }),
        })
        .collect()
}

fn check_base(base: u64) -> Result<u32, NumeralError> {
    if (2..=36).contains(&base) {
        Ok(base as u32)
    } else {
        Err(NumeralError::InvalidBase(base))
    }
}

impl InfNumeral {
    pub fn new(
        base: u64,
        length: Poly,
        head: Vec<u8>,
        tail: Vec<u8>,
        sign: Sign,
    ) -> Result<Self, NumeralError> {
        let base = check_base(base)?;
        if let Some(&d) = head.iter().chain(&tail).find(|d| u32::from(**d) >= base) {
            return Err(NumeralError::InvalidDigit {
                digit: char::from_digit(u32::from(d), 36).unwrap_or('?'),
                base,
            });
        }
        let bad_length = || NumeralError::InvalidLength(render::poly(&length));
        if !length.is_integer_valued() {
            return Err(bad_length());
        }
        let digits = match length.classify() {
            Class::InfinitePositive => Digits::Infinite {
                head: strip_trailing(head),
                tail: strip_leading(tail),
            },
            Class::FinitePositive => {
                let n = length
                    .constant_part()
                    .to_integer()
                    .to_usize()
                    .filter(|n| *n <= MAX_FINITE_LENGTH)
                    .ok_or_else(bad_length)?;
                let given = head.len() + tail.len();
                if given > n {
                    return Err(NumeralError::Overlap { given, length: n });
                }
                let mut all = head;
                all.resize(n - tail.len(), 0);
                all.extend(tail);
                Digits::Finite {
                    n,
                    digits: strip_trailing(all),
                }
            }
            _ => return Err(bad_length()),
        };
        Ok(InfNumeral {
            base,
            length,
            sign,
            digits,
        })
    }

    /// The all-zero numeral `0.000…000`.
    pub fn zero(base: u64, length: Poly) -> Result<Self, NumeralError> {
        Self::new(base, length, Vec::new(), Vec::new(), Sign::Unsigned)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn length(&self) -> &Poly {
        &self.length
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn head(&self) -> &[u8] {
        match &self.digits {
            Digits::Finite { digits, .. } => digits,
            Digits::Infinite { head, .. } => head,
        }
    }

    pub fn tail(&self) -> &[u8] {
        match &self.digits {
            Digits::Finite { .. } => &[],
            Digits::Infinite { tail, .. } => tail,
        }
    }

    pub fn is_zero_magnitude(&self) -> bool {
        self.head().is_empty() && self.tail().is_empty()
    }

    fn with_digits(&self, digits: Digits, sign: Sign) -> Self {
        InfNumeral {
            digits,
            sign,
            ..self.clone()
        }
    }

    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        let padded = |a: &[u8], b: &[u8]| {
            let n = a.len().max(b.len());
            let pad = |v: &[u8]| {
                let mut v = v.to_vec();
                v.resize(n, 0);
                v
            };
            pad(a).cmp(&pad(b))
        };
        let right_aligned = |a: &[u8], b: &[u8]| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.cmp(b))
        };
        padded(self.head(), other.head()).then_with(|| right_aligned(self.tail(), other.tail()))
    }

    fn increment(&self) -> Result<Digits, NumeralError> {
        let b = self.base as u8;
        match &self.digits {
            Digits::Finite { n, digits } => {
                let mut all = digits.clone();
                all.resize(*n, 0);
                if !add_one(&mut all, b) {
                    return Err(NumeralError::Overflow);
                }
                Ok(Digits::Finite {
                    n: *n,
                    digits: strip_trailing(all),
                })
            }
            Digits::Infinite { head, tail } => {
                let mut t = tail.clone();
                if !add_one(&mut t, b) {
                    // the carry lands on the zero run next to the tail
                    t.insert(0, 1);
                }
                Ok(Digits::Infinite {
                    head: head.clone(),
                    tail: t,
                })
            }
        }
    }

    fn decrement(&self) -> Result<Digits, NumeralError> {
        let b = self.base as u8;
        match &self.digits {
            Digits::Finite { n, digits } => {
                if digits.is_empty() {
                    return Err(NumeralError::Underflow);
                }
                let mut all = digits.clone();
                all.resize(*n, 0);
                sub_one(&mut all, b);
                Ok(Digits::Finite {
                    n: *n,
                    digits: strip_trailing(all),
                })
            }
            Digits::Infinite { head, tail } => {
                if tail.is_empty() {
                    return Err(if head.is_empty() {
                        NumeralError::Underflow
                    } else {
                        NumeralError::Unrepresentable
                    });
                }
                let mut t = tail.clone();
                sub_one(&mut t, b);
                Ok(Digits::Infinite {
                    head: head.clone(),
                    tail: strip_leading(t),
                })
            }
        }
    }

    /// The next numeral in the system's order.
    pub fn successor(&self) -> Result<Self, NumeralError> {
        match self.sign {
            Sign::Minus if self.is_zero_magnitude() => Ok(self.with_digits(self.digits.clone(), Sign::Plus)),
            Sign::Minus => Ok(self.with_digits(self.decrement()?, Sign::Minus)),
            s => Ok(self.with_digits(self.increment()?, s)),
        }
    }

    /// Exact inverse of [`successor`](Self::successor).
    pub fn predecessor(&self) -> Result<Self, NumeralError> {
        match self.sign {
            Sign::Plus if self.is_zero_magnitude() => Ok(self.with_digits(self.digits.clone(), Sign::Minus)),
            Sign::Minus => Ok(self.with_digits(self.increment()?, Sign::Minus)),
            s => Ok(self.with_digits(self.decrement()?, s)),
        }
    }
}

/// Adds one at the last position; `false` when the carry leaves the front.
fn add_one(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut().rev() {
        if *d + 1 < base {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// Subtracts one from a nonzero digit string.
fn sub_one(digits: &mut [u8], base: u8) {
    for d in digits.iter_mut().rev() {
        if *d > 0 {
            *d -= 1;
            return;
        }
        *d = base - 1;
    }
}

/// Orders two numerals of the same system. Signed numerals put every
/// negative numeral (including `-0.000…`) below every positive one.
pub fn compare_numerals(x: &InfNumeral, y: &InfNumeral) -> Result<Ordering, NumeralError> {
    let signed = |s: Sign| s != Sign::Unsigned;
    if x.base != y.base || x.length != y.length || signed(x.sign) != signed(y.sign) {
        return Err(NumeralError::IncomparableSystems);
    }
    Ok(match (x.sign, y.sign) {
        (Sign::Minus, Sign::Plus) => Ordering::Less,
        (Sign::Plus, Sign::Minus) => Ordering::Greater,
        (Sign::Minus, Sign::Minus) => x.cmp_magnitude(y).reverse(),
        _ => x.cmp_magnitude(y),
    })
}

/// The `n` smallest numerals of the unsigned system, from `0.000…000` up.
pub fn enumerate_first(base: u64, length: Poly, n: usize) -> Result<Vec<InfNumeral>, NumeralError> {
    let mut out = Vec::with_capacity(n);
    let mut cur = InfNumeral::zero(base, length)?;
    for i in 0..n {
        if i > 0 {
            match cur.successor() {
                Ok(next) => cur = next,
                Err(NumeralError::Overflow) => break,
                Err(e) => return Err(e),
            }
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// Number of numerals with `length` positions: `base^length`.
pub fn numeral_count(base: u64, length: &ExpExponent) -> Result<GrossNumber, GrossError> {
    pow_count(base, length)
}

/// `±(…a2 a1 a0 . a1 a2 …)` with `①` integer and `①` fractional digits:
/// `2·b^(2①)` numerals. Zero has two numerals here (`-0…0.0…0` and
/// `+0…0.0…0`); the count is of numerals.
pub fn signed_line_count(base: u64) -> Result<GrossNumber, GrossError> {
    scaled_double_length(base, 2)
}

/// `±(.a1 a2 …)·b^(±(p1 p2 …))` with `①` mantissa and `①` exponent digits:
/// `4·b^(2①)` numerals.
pub fn float_count(base: u64) -> Result<GrossNumber, GrossError> {
    scaled_double_length(base, 4)
}

fn scaled_double_length(base: u64, factor: i64) -> Result<GrossNumber, GrossError> {
    let two_g = Poly::grossone().scale(&crate::Rational::from_integer(2.into()));
    pow_count(base, &ExpExponent::Poly(two_g))?.mul(&GrossNumber::from(factor))
}

/// The two digit lengths around `log_base(target)`: systems with `k1`
/// positions hold at most `target` numerals, with `k2 = k1 + 1` more.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub base: u64,
    pub target: Poly,
    pub k1: CritRef,
    pub k2: CritRef,
}

impl CriticalPair {
    pub fn count_k1(&self) -> Result<GrossNumber, GrossError> {
        pow_count(self.base, &ExpExponent::Crit(self.k1.clone()))
    }

    pub fn count_k2(&self) -> Result<GrossNumber, GrossError> {
        pow_count(self.base, &ExpExponent::Crit(self.k2.clone()))
    }
}

pub fn critical(base: u64, target: &Poly) -> Result<CriticalPair, GrossError> {
    let k1 = CritRef::new(base, target.clone(), 0)?;
    let k2 = k1.with_offset(1);
    Ok(CriticalPair {
        base,
        target: target.clone(),
        k1,
        k2,
    })
}

/// Finite analogue of [`critical`]: `(k1, k1 + 1)` with `base^k1 ≤ n < base^(k1+1)`.
pub fn finite_critical(base: u64, n: &num_bigint::BigInt) -> (u64, u64) {
    let k1 = crate::gnum::int_log(&base.into(), n);
    (k1, k1 + 1)
}

fn digit_str(d: &[u8]) -> String {
    d.iter()
        .map(|&x| char::from_digit(u32::from(x), 36).expect("digit < 36"))
        .collect()
}

impl fmt::Display for InfNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Unsigned => "",
            Sign::Plus => "+",
            Sign::Minus => "-",
        };
        let body = match &self.digits {
            Digits::Finite { n, digits } => {
                let mut all = digits.clone();
                all.resize(*n, 0);
                digit_str(&all)
            }
            Digits::Infinite { head, tail } => {
                format!("{}000…000{}", digit_str(head), digit_str(tail))
            }
        };
        let len = render::poly(&self.length);
        let len_atom = if len == "G" || len.bytes().all(|b| b.is_ascii_digit()) {
            len.clone()
        } else {
            format!("({len})")
        };
        write!(f, "{sign}0.{body} [{}^{len_atom} positions: {len}]", self.base)
    }
}
