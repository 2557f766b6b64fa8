//! Counting systems as instruments of bounded accuracy.
//!
//! Each system maps a true count to one of its numerals. Weak systems merge
//! many counts into one inexact token (`many`, `∞`, `ℵ0`, …) and inherit the
//! degenerate arithmetic of that token (`many + 1 = many`, `C + ℵ0 = C`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::gnum::{Class, ExpExponent, GrossError, GrossNumber};

/// Default boundary between Mundurukú "some, not many" and "many, really many".
pub const DEFAULT_MUNDURUKU_THRESHOLD: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObserverError {
    #[error("negative count {0}")]
    NegativeCount(String),
    #[error("{0} is not a count")]
    NotACount(String),
    #[error("token {token} does not belong to {system}")]
    ForeignToken { system: SystemId, token: String },
    #[error("Munduruku threshold must be at least 11 (got {0})")]
    InvalidThreshold(u64),
    #[error("unknown counting system {0:?}")]
    UnknownSystem(String),
    #[error(transparent)]
    Gross(#[from] GrossError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemId {
    Piraha,
    Munduruku,
    CalculusInfinity,
    Cantor,
    Grossone,
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemId::Piraha => "piraha",
            SystemId::Munduruku => "munduruku",
            SystemId::CalculusInfinity => "calculus",
            SystemId::Cantor => "cantor",
            SystemId::Grossone => "grossone",
        })
    }
}

impl FromStr for SystemId {
    type Err = ObserverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "piraha" | "pirahã" => Ok(SystemId::Piraha),
            "munduruku" | "mundurukú" => Ok(SystemId::Munduruku),
            "calculus" | "calculusinfinity" | "calcinf" => Ok(SystemId::CalculusInfinity),
            "cantor" => Ok(SystemId::Cantor),
            "grossone" => Ok(SystemId::Grossone),
            _ => Err(ObserverError::UnknownSystem(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Exact(GrossNumber),
    Many,
    SomeNotMany,
    ManyReallyMany,
    Infinity,
    Aleph0,
    Continuum,
}

impl Token {
    pub fn exact(n: i64) -> Self {
        Token::Exact(GrossNumber::from(n))
    }

    /// Parses the name of an inexact token.
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "many" => Token::Many,
            "somenotmany" | "some_not_many" => Token::SomeNotMany,
            "manyreallymany" | "many_really_many" => Token::ManyReallyMany,
            "inf" | "infinity" => Token::Infinity,
            "aleph0" => Token::Aleph0,
            "C" | "continuum" => Token::Continuum,
            _ => return None,
        })
    }

    /// Position among a system's inexact tokens (exact tokens rank 0).
    fn rank(&self) -> u8 {
        match self {
            Token::Exact(_) => 0,
            Token::Many | Token::SomeNotMany | Token::Infinity | Token::Aleph0 => 1,
            Token::ManyReallyMany | Token::Continuum => 2,
        }
    }

    /// Order of tokens within one system; `None` when exact values are not
    /// comparable.
    pub fn cmp_in_system(&self, other: &Token) -> Option<Ordering> {
        match (self, other) {
            (Token::Exact(a), Token::Exact(b)) => a.compare(b).ok(),
            _ => Some(self.rank().cmp(&other.rank())),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Exact(v) => write!(f, "{v}"),
            Token::Many => f.write_str("many"),
            Token::SomeNotMany => f.write_str("some_not_many"),
            Token::ManyReallyMany => f.write_str("many_really_many"),
            Token::Infinity => f.write_str("inf"),
            Token::Aleph0 => f.write_str("aleph0"),
            Token::Continuum => f.write_str("C"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountingSystem {
    id: SystemId,
    threshold: u64,
}

impl CountingSystem {
    pub fn new(id: SystemId) -> Self {
        CountingSystem {
            id,
            threshold: DEFAULT_MUNDURUKU_THRESHOLD,
        }
    }

    /// Mundurukú with a custom "some, not many" / "many, really many"
    /// boundary. It must exceed every sum of two exact tokens (`5 + 5`).
    pub fn munduruku(threshold: u64) -> Result<Self, ObserverError> {
        if threshold < 11 {
            return Err(ObserverError::InvalidThreshold(threshold));
        }
        Ok(CountingSystem {
            id: SystemId::Munduruku,
            threshold,
        })
    }

    pub fn id(&self) -> SystemId {
        self.id
    }

    /// Mundurukú boundary between the two inexact tokens.
    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// Largest count the system names exactly (`None`: unbounded).
    fn exact_limit(&self) -> Option<i64> {
        match self.id {
            SystemId::Piraha => Some(2),
            SystemId::Munduruku => Some(5),
            _ => None,
        }
    }

    pub fn contains(&self, token: &Token) -> bool {
        match (self.id, token) {
            (_, Token::Exact(v)) => {
                if self.id == SystemId::Grossone {
                    return true;
                }
                match (v.as_integer(), self.exact_limit()) {
                    (Some(n), Some(limit)) => n >= BigInt::from(0) && n <= BigInt::from(limit),
                    (Some(n), None) => n >= BigInt::from(0),
                    (None, _) => false,
                }
            }
            (SystemId::Piraha, Token::Many) => true,
            (SystemId::Munduruku, Token::SomeNotMany | Token::ManyReallyMany) => true,
            (SystemId::CalculusInfinity, Token::Infinity) => true,
            (SystemId::Cantor, Token::Aleph0 | Token::Continuum) => true,
            _ => false,
        }
    }

    /// The numeral this system assigns to the count `v`.
    pub fn observe(&self, v: &GrossNumber) -> Result<Observation, ObserverError> {
        let class = v.classify();
        match class {
            Class::FiniteNegative | Class::InfiniteNegative => {
                return Err(ObserverError::NegativeCount(v.to_string()))
            }
            Class::Infinitesimal => return Err(ObserverError::NotACount(v.to_string())),
            _ => {}
        }
        let finite = if class.is_finite() {
            Some(
                v.as_integer()
                    .ok_or_else(|| ObserverError::NotACount(v.to_string()))?,
            )
        } else {
            None
        };
        let token = match (self.id, finite) {
            (SystemId::Grossone, _) => Token::Exact(v.clone()),
            (_, Some(n)) if self.exact_limit().is_none_or(|l| n <= BigInt::from(l)) => {
                Token::Exact(v.clone())
            }
            (SystemId::Piraha, _) => Token::Many,
            (SystemId::Munduruku, Some(n)) if n < BigInt::from(self.threshold) => Token::SomeNotMany,
            (SystemId::Munduruku, _) => Token::ManyReallyMany,
            (SystemId::CalculusInfinity, _) => Token::Infinity,
            (SystemId::Cantor, _) => match v {
                GrossNumber::E(e) if matches!(e.exponent(), ExpExponent::Poly(_)) => Token::Continuum,
                _ => Token::Aleph0,
            },
        };
        Ok(Observation {
            system: self.id,
            token,
        })
    }

    fn check(&self, t: &Token) -> Result<(), ObserverError> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(ObserverError::ForeignToken {
                system: self.id,
                token: t.to_string(),
            })
        }
    }

    /// Addition as the system performs it.
    pub fn weak_add(&self, a: &Token, b: &Token) -> Result<Token, ObserverError> {
        self.check(a)?;
        self.check(b)?;
        if let (Token::Exact(x), Token::Exact(y)) = (a, b) {
            let sum = x.add(y)?;
            if self.id == SystemId::Grossone {
                return Ok(Token::Exact(sum));
            }
            // exact sums are re-observed; two exact Mundurukú tokens never
            // reach the threshold, so an overflow lands on "some, not many"
            return Ok(self.observe(&sum)?.token);
        }
        // otherwise the larger inexact token absorbs the other operand
        Ok(if a.rank() >= b.rank() { a.clone() } else { b.clone() })
    }

    pub fn distinguishable(&self, u: &GrossNumber, v: &GrossNumber) -> Result<bool, ObserverError> {
        Ok(self.observe(u)?.token != self.observe(v)?.token)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Observation {
    pub system: SystemId,
    pub token: Token,
}

impl Observation {
    /// The observed value when the token names a unique number.
    pub fn exact(&self) -> Option<&GrossNumber> {
        match &self.token {
            Token::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(id: SystemId) -> CountingSystem {
        CountingSystem::new(id)
    }

    #[test]
    fn piraha_merges_three_and_four() {
        let p = sys(SystemId::Piraha);
        assert_eq!(p.observe(&3.into()).unwrap().token, Token::Many);
        assert_eq!(p.observe(&4.into()).unwrap().token, Token::Many);
        assert_eq!(p.observe(&2.into()).unwrap().token, Token::exact(2));
        assert!(!p.distinguishable(&3.into(), &4.into()).unwrap());
        assert!(sys(SystemId::Munduruku).distinguishable(&3.into(), &4.into()).unwrap());
    }

    #[test]
    fn munduruku_bands() {
        let m = sys(SystemId::Munduruku);
        assert_eq!(m.observe(&5.into()).unwrap().token, Token::exact(5));
        assert_eq!(m.observe(&6.into()).unwrap().token, Token::SomeNotMany);
        assert_eq!(m.observe(&99.into()).unwrap().token, Token::SomeNotMany);
        assert_eq!(m.observe(&100.into()).unwrap().token, Token::ManyReallyMany);
        assert_eq!(m.observe(&GrossNumber::grossone()).unwrap().token, Token::ManyReallyMany);
        assert_eq!(m.weak_add(&Token::exact(2), &Token::exact(2)).unwrap(), Token::exact(4));
        assert_eq!(m.weak_add(&Token::exact(5), &Token::exact(5)).unwrap(), Token::SomeNotMany);
        assert!(CountingSystem::munduruku(10).is_err());
    }

    #[test]
    fn foreign_tokens() {
        let p = sys(SystemId::Piraha);
        assert!(matches!(
            p.weak_add(&Token::Aleph0, &Token::exact(1)),
            Err(ObserverError::ForeignToken { .. })
        ));
        assert!(matches!(
            p.weak_add(&Token::exact(3), &Token::exact(1)),
            Err(ObserverError::ForeignToken { .. })
        ));
    }

    #[test]
    fn negative_and_fractional_counts() {
        let c = sys(SystemId::Cantor);
        assert!(matches!(c.observe(&(-1).into()), Err(ObserverError::NegativeCount(_))));
        let half = GrossNumber::one().div_exact(&2.into()).unwrap();
        assert!(matches!(c.observe(&half), Err(ObserverError::NotACount(_))));
    }

    #[test]
    fn system_names() {
        assert_eq!("Piraha".parse::<SystemId>().unwrap(), SystemId::Piraha);
        assert!("roman".parse::<SystemId>().is_err());
    }
}
