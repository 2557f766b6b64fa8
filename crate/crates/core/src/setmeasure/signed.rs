use std::fmt;

use super::{list, NatSubset, SetError, SetOp};
use crate::Poly;

/// Subset of `{-①..①}`: a mirrored [`NatSubset`] for the negatives, an
/// optional zero and a [`NatSubset`] for the positives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSet {
    negatives: NatSubset,
    has_zero: bool,
    positives: NatSubset,
}

impl SignedSet {
    pub fn new(negatives: NatSubset, has_zero: bool, positives: NatSubset) -> Self {
        SignedSet {
            negatives,
            has_zero,
            positives,
        }
    }

    /// `ℤ`, with `2① + 1` elements.
    pub fn integers() -> Self {
        Self::new(NatSubset::naturals(), true, NatSubset::naturals())
    }

    pub fn empty() -> Self {
        Self::new(NatSubset::empty(), false, NatSubset::empty())
    }

    pub fn from_nat(positives: NatSubset) -> Self {
        Self::new(NatSubset::empty(), false, positives)
    }

    /// `{-k : k ∈ s}`.
    pub fn mirror(s: NatSubset) -> Self {
        Self::new(s, false, NatSubset::empty())
    }

    pub fn finite(elems: impl IntoIterator<Item = i64>) -> Self {
        let mut neg = Vec::new();
        let mut pos = Vec::new();
        let mut zero = false;
        for e in elems {
            match e {
                0 => zero = true,
                e if e < 0 => neg.push(e.unsigned_abs()),
                e => pos.push(e as u64),
            }
        }
        Self::new(
            NatSubset::finite(neg).expect("nonzero"),
            zero,
            NatSubset::finite(pos).expect("nonzero"),
        )
    }

    pub fn negatives(&self) -> &NatSubset {
        &self.negatives
    }

    pub fn has_zero(&self) -> bool {
        self.has_zero
    }

    pub fn positives(&self) -> &NatSubset {
        &self.positives
    }

    /// The positive part alone, when nothing else is present.
    pub fn as_nat(&self) -> Option<&NatSubset> {
        (!self.has_zero && self.negatives.is_empty()).then_some(&self.positives)
    }

    pub fn contains(&self, n: i64) -> bool {
        match n {
            0 => self.has_zero,
            n if n < 0 => self.negatives.contains(n.unsigned_abs()),
            n => self.positives.contains(n as u64),
        }
    }

    pub fn combine(op: SetOp, s: &SignedSet, t: &SignedSet) -> Result<SignedSet, SetError> {
        Ok(SignedSet {
            negatives: NatSubset::combine(op, &s.negatives, &t.negatives)?,
            has_zero: op.apply(s.has_zero, t.has_zero),
            positives: NatSubset::combine(op, &s.positives, &t.positives)?,
        })
    }

    /// `{-①..①} ∖ self`.
    pub fn complement(&self) -> SignedSet {
        SignedSet {
            negatives: self.negatives.complement(),
            has_zero: !self.has_zero,
            positives: self.positives.complement(),
        }
    }

    pub fn card(&self) -> Poly {
        let zero = Poly::from_i64(i64::from(self.has_zero));
        self.negatives.card().add(&zero).add(&self.positives.card())
    }

    /// Largest absolute value among the exceptions of either side.
    pub fn max_exception(&self) -> u64 {
        self.negatives
            .max_exception()
            .max(self.positives.max_exception())
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::integers() {
            return f.write_str("Z");
        }
        let mut literal: Vec<i64> = Vec::new();
        let mut parts = Vec::new();
        if self.negatives.is_finite() {
            literal.extend(self.negatives.added().iter().rev().map(|&n| -(n as i64)));
        } else {
            parts.push(format!("neg({})", self.negatives));
        }
        if self.has_zero {
            literal.push(0);
        }
        if self.positives.is_finite() {
            literal.extend(self.positives.added().iter().map(|&n| n as i64));
        } else {
            parts.push(self.positives.to_string());
        }
        if !literal.is_empty() {
            parts.insert(0, list(literal.iter().map(i64::to_string)));
        }
        if parts.is_empty() {
            return f.write_str("{}");
        }
        // wrap pieces containing a difference so `|` cannot capture them
        let parts: Vec<String> = parts
            .into_iter()
            .map(|p| if p.contains('\\') && !p.starts_with("neg(") { format!("({p})") } else { p })
            .collect();
        f.write_str(&parts.join(" | "))
    }
}
