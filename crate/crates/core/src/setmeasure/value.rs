use std::fmt;

use super::{NatSubset, SetError, SetOp, SignedSet};
use crate::Poly;

/// A measurable set, typed by its universe: `{1..①}` or `{-①..①}`.
///
/// The type is sticky: combining with a signed set gives a signed set, and
/// complements are taken within the set's own universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SetValue {
    Nat(NatSubset),
    Signed(SignedSet),
}

impl SetValue {
    pub fn to_signed(&self) -> SignedSet {
        match self {
            SetValue::Nat(n) => SignedSet::from_nat(n.clone()),
            SetValue::Signed(s) => s.clone(),
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, SetValue::Signed(_))
    }

    pub fn combine(op: SetOp, a: &SetValue, b: &SetValue) -> Result<SetValue, SetError> {
        match (a, b) {
            (SetValue::Nat(x), SetValue::Nat(y)) => Ok(SetValue::Nat(NatSubset::combine(op, x, y)?)),
            _ => Ok(SetValue::Signed(SignedSet::combine(
                op,
                &a.to_signed(),
                &b.to_signed(),
            )?)),
        }
    }

    pub fn complement(&self) -> SetValue {
        match self {
            SetValue::Nat(n) => SetValue::Nat(n.complement()),
            SetValue::Signed(s) => SetValue::Signed(s.complement()),
        }
    }

    /// `{-k : k ∈ self}`, always signed.
    pub fn mirror(&self) -> SetValue {
        let s = self.to_signed();
        SetValue::Signed(SignedSet::new(
            s.positives().clone(),
            s.has_zero(),
            s.negatives().clone(),
        ))
    }

    pub fn card(&self) -> Poly {
        match self {
            SetValue::Nat(n) => n.card(),
            SetValue::Signed(s) => s.card(),
        }
    }

    pub fn contains(&self, k: i64) -> bool {
        match self {
            SetValue::Nat(n) => k > 0 && n.contains(k as u64),
            SetValue::Signed(s) => s.contains(k),
        }
    }

    pub fn max_exception(&self) -> u64 {
        match self {
            SetValue::Nat(n) => n.max_exception(),
            SetValue::Signed(s) => s.max_exception(),
        }
    }

    /// Moduli of the periodic parts (one, or two for signed sets).
    pub fn moduli(&self) -> Vec<u64> {
        match self {
            SetValue::Nat(n) => vec![n.modulus()],
            SetValue::Signed(s) => vec![s.negatives().modulus(), s.positives().modulus()],
        }
    }
}

impl fmt::Display for SetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetValue::Nat(n) => n.fmt(f),
            // a signed set without zero or negatives keeps its type as `Z & …`
            SetValue::Signed(s) => match s.as_nat().map(NatSubset::to_string) {
                Some(n) if n.contains(" | ") || n.contains(" \\ ") => write!(f, "Z & ({n})"),
                Some(n) => write!(f, "Z & {n}"),
                None => s.fmt(f),
            },
        }
    }
}
