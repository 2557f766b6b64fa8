//! Finite sums of gross-powers: `c1·①^e1 + c2·①^e2 + …` with exact
//! coefficients and exponents that are themselves gross-polynomials.
//!
//! Terms are kept sorted by strictly decreasing exponent and never carry a
//! zero coefficient, so structural equality is value equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;


use super::coeff::Coeff;
use super::error::{GrossError, Result};

/// Maximum nesting depth of exponents (`①` has depth 1, `①^①` depth 2).
pub const MAX_DEPTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<C: Coeff> {
    pub coeff: C,
    pub exp: GrossPoly<C>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrossPoly<C: Coeff> {
    terms: Vec<Term<C>>,
}

/// Magnitude class of a value, read off its leading term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Zero,
    FinitePositive,
    FiniteNegative,
    InfinitePositive,
    InfiniteNegative,
    Infinitesimal,
}

impl Class {
    pub fn is_infinite(self) -> bool {
        matches!(self, Class::InfinitePositive | Class::InfiniteNegative)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Class::Zero | Class::FinitePositive | Class::FiniteNegative)
    }
}

impl<C: Coeff> GrossPoly<C> {
    pub fn zero() -> Self {
        GrossPoly { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            GrossPoly {
                terms: vec![Term {
                    coeff: c,
                    exp: Self::zero(),
                }],
            }
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// Grossone itself.
    pub fn grossone() -> Self {
        GrossPoly {
            terms: vec![Term {
                coeff: C::one(),
                exp: Self::one(),
            }],
        }
    }

    /// `c·①^exp`; fails when the result would nest deeper than [`MAX_DEPTH`].
    pub fn monomial(c: C, exp: GrossPoly<C>) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        if exp.depth() + 1 > MAX_DEPTH {
            return Err(GrossError::DepthExceeded(MAX_DEPTH));
        }
        Ok(GrossPoly {
            terms: vec![Term { coeff: c, exp }],
        })
    }

    /// Builds a canonical polynomial from arbitrary terms (merging equal
    /// exponents and dropping zeros).
    pub fn from_terms(terms: impl IntoIterator<Item = Term<C>>) -> Self {
        let mut acc: BTreeMap<GrossPoly<C>, C> = BTreeMap::new();
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            let entry = acc.entry(t.exp).or_insert_with(C::zero);
            *entry = entry.clone() + t.coeff;
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exp, coeff)| Term { coeff, exp })
            .collect();
        GrossPoly { terms }
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .filter(|t| !t.exp.is_zero())
            .map(|t| 1 + t.exp.depth())
            .max()
            .unwrap_or(0)
    }

    /// The value as a plain coefficient when it is finite (or zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [t] if t.exp.is_zero() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Coefficient of the `①^0` term.
    pub fn constant_part(&self) -> C {
        self.terms
            .iter()
            .find(|t| t.exp.is_zero())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn classify(&self) -> Class {
        match self.leading() {
            None => Class::Zero,
            Some(t) => {
                let pos = t.coeff.is_positive();
                match t.exp.signum() {
                    Ordering::Greater if pos => Class::InfinitePositive,
                    Ordering::Greater => Class::InfiniteNegative,
                    Ordering::Equal if pos => Class::FinitePositive,
                    Ordering::Equal => Class::FiniteNegative,
                    Ordering::Less => Class::Infinitesimal,
                }
            }
        }
    }

    /// Sign of the value: the sign of its leading coefficient.
    pub fn signum(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some(t) if t.coeff.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn neg(&self) -> Self {
        GrossPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff.clone(),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GrossPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone() * c.clone(),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                out.push(Term {
                    coeff: a.coeff.clone() * b.coeff.clone(),
                    exp: a.exp.add(&b.exp),
                });
            }
        }
        Self::from_terms(out)
    }

    /// Exact quotient by a single-term divisor; multi-term divisors are
    /// rejected unless the dividend is zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        match divisor.terms.as_slice() {
            [] => Err(GrossError::DivisionByZero),
            [d] => Ok(GrossPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|t| Term {
                        coeff: t.coeff.clone() / d.coeff.clone(),
                        exp: t.exp.sub(&d.exp),
                    })
                    .collect(),
            }),
            _ if self.is_zero() => Ok(Self::zero()),
            _ => Err(GrossError::NonExactDivision(
                "divisor has more than one term".into(),
            )),
        }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow_u32(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^exp` for a single-term base with unit coefficient
    /// (`(①^e)^k = ①^(e·k)`).
    pub fn pow_poly(&self, exp: &Self) -> Result<Self> {
        match self.terms.as_slice() {
            [] if exp.signum() == Ordering::Greater => Ok(Self::zero()),
            [t] if t.coeff.is_one() => Self::monomial(C::one(), t.exp.mul(exp)),
            _ => Err(GrossError::UnsupportedExponent(
                "only unit-coefficient gross-powers take symbolic exponents".into(),
            )),
        }
    }

    /// Is this a whole number under the divisibility rule: an integer
    /// constant plus infinite terms whose exponents are integers or infinite?
    pub fn is_integer_valued(&self) -> bool {
        self.terms.iter().all(|t| {
            if t.exp.is_zero() {
                return t.coeff.to_rational().is_integer();
            }
            match t.exp.as_constant() {
                Some(e) => e.to_rational().is_integer() && e.is_positive(),
                None => t.exp.classify() == Class::InfinitePositive,
            }
        })
    }

    pub fn map_coeffs<D: Coeff>(&self, f: &impl Fn(&C) -> D) -> GrossPoly<D> {
        GrossPoly::from_terms(self.terms.iter().map(|t| Term {
            coeff: f(&t.coeff),
            exp: t.exp.map_coeffs(f),
        }))
    }
}

impl<C: Coeff> Ord for GrossPoly<C> {
    /// Sign of `self − other`, computed by a single merge over both term
    /// lists without building the difference.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.terms.get(i), other.terms.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(a), None) => return sign_of(&a.coeff),
                (None, Some(b)) => return sign_of(&b.coeff).reverse(),
                (Some(a), Some(b)) => match a.exp.cmp(&b.exp) {
                    Ordering::Greater => return sign_of(&a.coeff),
                    Ordering::Less => return sign_of(&b.coeff).reverse(),
                    Ordering::Equal => match a.coeff.cmp(&b.coeff) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl<C: Coeff> PartialOrd for GrossPoly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn sign_of<C: Coeff>(c: &C) -> Ordering {
    c.cmp(&C::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type P = GrossPoly<Ratio<i64>>;

    fn c(n: i64) -> P {
        P::from_i64(n)
    }

    fn g() -> P {
        P::grossone()
    }

    #[test]
    fn cancellation_gives_canonical_zero() {
        let x = g().sub(&g());
        assert!(x.is_zero());
        assert_eq!(x.classify(), Class::Zero);
    }

    #[test]
    fn mixed_sign_ordering() {
        // ① > −①²
        let neg_sq = g().mul(&g()).neg();
        assert_eq!(g().cmp(&neg_sq), Ordering::Greater);
        // ① − 1 < ①
        assert!(g().sub(&c(1)) < g());
        // 1000① < ①²
        assert!(g().scale(&Ratio::from_integer(1000)) < g().mul(&g()));
    }

    #[test]
    fn infinitesimals_sit_between_zero_and_finite() {
        let eps = c(1).div_exact(&g()).unwrap();
        assert_eq!(eps.classify(), Class::Infinitesimal);
        assert!(eps > c(0));
        assert!(eps < P::constant(Ratio::new(1, 1_000_000)));
    }

    #[test]
    fn depth_cap() {
        let mut p = g();
        for _ in 1..MAX_DEPTH {
            p = P::monomial(Ratio::from_integer(1), p).unwrap();
        }
        assert_eq!(p.depth(), MAX_DEPTH);
        assert_eq!(
            P::monomial(Ratio::from_integer(1), p),
            Err(GrossError::DepthExceeded(MAX_DEPTH))
        );
    }

    #[test]
    fn multi_term_division_rejected() {
        let x = g().mul(&g());
        let y = g().add(&c(1));
        assert!(matches!(x.div_exact(&y), Err(GrossError::NonExactDivision(_))));
        assert_eq!(x.div_exact(&c(0)), Err(GrossError::DivisionByZero));
    }

    #[test]
    fn integer_valued_targets() {
        assert!(g().is_integer_valued());
        assert!(g().scale(&Ratio::new(1, 55)).add(&c(3)).is_integer_valued());
        assert!(!g().add(&P::constant(Ratio::new(1, 2))).is_integer_valued());
        let root = P::monomial(Ratio::from_integer(1), P::constant(Ratio::new(1, 2))).unwrap();
        assert!(!root.is_integer_valued());
    }
}
