//! Eventually-periodic subsets of `{1..①}` and `{-①..①}` with exact
//! grossone cardinalities.
//!
//! Every residue class modulo a finite `d` inside `{1..①}` has exactly `①/d`
//! elements (① is divisible by every finite integer), so a set made of `k`
//! classes mod `d` plus finitely many exceptions has `k·①/d + |added| −
//! |removed|` elements.

mod signed;
mod value;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::gnum::{GrossError, GrossNumber};
use crate::{Poly, Rational};

pub use signed::SignedSet;
pub use value::SetValue;

/// Largest modulus a combination may reach.
pub const MAX_MODULUS: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("progression needs first >= 1 and step >= 1 (got first {first}, step {step})")]
    InvalidProgression { first: i64, step: i64 },
    #[error("combined modulus {0} exceeds {MAX_MODULUS}")]
    ModulusTooLarge(u128),
    #[error("element {0} is not a natural number")]
    NotNatural(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetOp {
    Union,
    Intersect,
    Difference,
}

impl SetOp {
    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            SetOp::Union => a || b,
            SetOp::Intersect => a && b,
            SetOp::Difference => a && !b,
        }
    }
}

/// Residue classes mod `modulus`, plus finitely many added and removed
/// exceptions. Kept canonical: the modulus is minimal, `added` only holds
/// points outside the periodic part and `removed` only points inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatSubset {
    modulus: u64,
    residues: BTreeSet<u64>,
    added: BTreeSet<u64>,
    removed: BTreeSet<u64>,
}

impl NatSubset {
    pub fn empty() -> Self {
        NatSubset {
            modulus: 1,
            residues: BTreeSet::new(),
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
        }
    }

    /// `ℕ` itself.
    pub fn naturals() -> Self {
        NatSubset {
            residues: BTreeSet::from([0]),
            ..Self::empty()
        }
    }

    pub fn finite(elems: impl IntoIterator<Item = u64>) -> Result<Self, SetError> {
        let added: BTreeSet<u64> = elems.into_iter().collect();
        if added.contains(&0) {
            return Err(SetError::NotNatural(0));
        }
        Ok(NatSubset {
            added,
            ..Self::empty()
        })
    }

    /// `{first + k·step : k ≥ 0}`.
    pub fn progression(first: u64, step: u64) -> Result<Self, SetError> {
        if first == 0 || step == 0 || step > MAX_MODULUS {
            return Err(SetError::InvalidProgression {
                first: first as i64,
                step: step as i64,
            });
        }
        let r = first % step;
        let removed = (1..first).filter(|n| n % step == r);
        Ok(Self::normalize(step, BTreeSet::from([r]), |n| n >= first, removed))
    }

    /// Builds the canonical form of the set whose periodic part is
    /// `residues` mod `modulus` and whose membership at each candidate
    /// exception point is given by `member`.
    fn normalize(
        modulus: u64,
        residues: BTreeSet<u64>,
        member: impl Fn(u64) -> bool,
        candidates: impl IntoIterator<Item = u64>,
    ) -> Self {
        let modulus = minimal_period(modulus, &residues);
        let residues: BTreeSet<u64> = residues.into_iter().filter(|r| *r < modulus).collect();
        let mut added = BTreeSet::new();
        let mut removed = BTreeSet::new();
        for n in candidates {
            let periodic = residues.contains(&(n % modulus));
            match (member(n), periodic) {
                (true, false) => {
                    added.insert(n);
                }
                (false, true) => {
                    removed.insert(n);
                }
                _ => {}
            }
        }
        NatSubset {
            modulus,
            residues,
            added,
            removed,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn added(&self) -> &BTreeSet<u64> {
        &self.added
    }

    pub fn removed(&self) -> &BTreeSet<u64> {
        &self.removed
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.added.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    /// Largest exceptional element, or 0 when there is none.
    pub fn max_exception(&self) -> u64 {
        let a = self.added.last().copied().unwrap_or(0);
        let r = self.removed.last().copied().unwrap_or(0);
        a.max(r)
    }

    fn periodic(&self, n: u64) -> bool {
        self.residues.contains(&(n % self.modulus))
    }

    pub fn contains(&self, n: u64) -> bool {
        if n == 0 || self.removed.contains(&n) {
            return false;
        }
        self.added.contains(&n) || self.periodic(n)
    }

    pub fn combine(op: SetOp, s: &NatSubset, t: &NatSubset) -> Result<NatSubset, SetError> {
        let l = s.modulus.lcm(&t.modulus);
        if l > MAX_MODULUS {
            return Err(SetError::ModulusTooLarge(u128::from(l)));
        }
        let residues = (0..l)
            .filter(|&r| op.apply(s.periodic(r), t.periodic(r)))
            .collect();
        let candidates: BTreeSet<u64> = [&s.added, &s.removed, &t.added, &t.removed]
            .into_iter()
            .flatten()
            .copied()
            .collect();
        Ok(Self::normalize(
            l,
            residues,
            |n| op.apply(s.contains(n), t.contains(n)),
            candidates,
        ))
    }

    pub fn union(&self, other: &NatSubset) -> Result<NatSubset, SetError> {
        Self::combine(SetOp::Union, self, other)
    }

    pub fn intersect(&self, other: &NatSubset) -> Result<NatSubset, SetError> {
        Self::combine(SetOp::Intersect, self, other)
    }

    pub fn difference(&self, other: &NatSubset) -> Result<NatSubset, SetError> {
        Self::combine(SetOp::Difference, self, other)
    }

    /// `{1..①} ∖ self`.
    pub fn complement(&self) -> NatSubset {
        NatSubset {
            modulus: self.modulus,
            residues: (0..self.modulus)
                .filter(|r| !self.residues.contains(r))
                .collect(),
            added: self.removed.clone(),
            removed: self.added.clone(),
        }
    }

    /// `|residues|·①/d + |added| − |removed|`.
    pub fn card(&self) -> Poly {
        let share = Rational::new(
            BigInt::from(self.residues.len()),
            BigInt::from(self.modulus),
        );
        let exceptions = self.added.len() as i64 - self.removed.len() as i64;
        Poly::grossone()
            .scale(&share)
            .add(&Poly::from_i64(exceptions))
    }

    /// The `n` smallest elements (fewer when the set is finite and small).
    pub fn members(&self, n: usize) -> Vec<u64> {
        if self.is_finite() {
            return self.added.iter().copied().take(n).collect();
        }
        (1..).filter(|&k| self.contains(k)).take(n).collect()
    }
}

/// Smallest divisor `p` of `d` such that `residues` mod `d` is `p`-periodic.
fn minimal_period(d: u64, residues: &BTreeSet<u64>) -> u64 {
    if residues.is_empty() {
        return 1;
    }
    let mut divisors: Vec<u64> = (1..=d).take_while(|p| p * p <= d).filter(|&p| d.is_multiple_of(p)).collect();
    let upper: Vec<u64> = divisors.iter().map(|p| d / p).collect();
    divisors.extend(upper);
    divisors.sort_unstable();
    divisors.dedup();
    divisors
        .into_iter()
        .find(|&p| (0..d).all(|r| residues.contains(&r) == residues.contains(&(r % p))))
        .unwrap_or(d)
}

/// Cardinality of `s × t`.
pub fn product_card(s: &Poly, t: &Poly) -> Result<GrossNumber, GrossError> {
    GrossNumber::P(s.clone()).mul(&GrossNumber::P(t.clone()))
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", items.into_iter().collect::<Vec<_>>().join(", "))
}

impl NatSubset {
    /// Pieces joined by `|`, and the removed list (if any), for rendering.
    fn render_parts(&self) -> (Vec<String>, Option<String>) {
        let mut parts = Vec::new();
        if self.modulus == 1 && !self.residues.is_empty() {
            parts.push("N".to_string());
        } else {
            for &r in &self.residues {
                let first = if r == 0 { self.modulus } else { r };
                parts.push(format!("ap({first}, {})", self.modulus));
            }
        }
        if !self.added.is_empty() {
            parts.push(list(self.added.iter().map(u64::to_string)));
        }
        let removed =
            (!self.removed.is_empty()).then(|| list(self.removed.iter().map(u64::to_string)));
        (parts, removed)
    }
}

impl fmt::Display for NatSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (parts, removed) = self.render_parts();
        let body = if parts.is_empty() {
            "{}".to_string()
        } else {
            parts.join(" | ")
        };
        match removed {
            None => f.write_str(&body),
            Some(r) if parts.len() > 1 => write!(f, "({body}) \\ {r}"),
            Some(r) => write!(f, "{body} \\ {r}"),
        }
    }
}
