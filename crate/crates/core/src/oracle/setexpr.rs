use std::fmt;

use crate::setmeasure::{NatSubset, SetError, SetOp, SetValue, SignedSet};

/// A set expression tree with a membership predicate that does not go
/// through the canonical set algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    Naturals,
    Integers,
    Finite(Vec<i64>),
    /// `{first + k·step : k ≥ 0}`.
    Progression { first: u64, step: u64 },
    Mirror(Box<SetExpr>),
    Op(SetOp, Box<SetExpr>, Box<SetExpr>),
    Complement(Box<SetExpr>),
    /// An already-built set, trusted as is.
    Value(SetValue),
}

impl SetExpr {
    pub fn union(self, other: SetExpr) -> SetExpr {
        SetExpr::Op(SetOp::Union, Box::new(self), Box::new(other))
    }

    pub fn intersect(self, other: SetExpr) -> SetExpr {
        SetExpr::Op(SetOp::Intersect, Box::new(self), Box::new(other))
    }

    pub fn difference(self, other: SetExpr) -> SetExpr {
        SetExpr::Op(SetOp::Difference, Box::new(self), Box::new(other))
    }

    pub fn complement(self) -> SetExpr {
        SetExpr::Complement(Box::new(self))
    }

    pub fn mirror(self) -> SetExpr {
        SetExpr::Mirror(Box::new(self))
    }

    /// Whether the universe is `{-①..①}` rather than `{1..①}`.
    pub fn is_signed(&self) -> bool {
        match self {
            SetExpr::Naturals | SetExpr::Progression { .. } => false,
            SetExpr::Integers | SetExpr::Mirror(_) => true,
            SetExpr::Finite(v) => v.iter().any(|&x| x <= 0),
            SetExpr::Op(_, a, b) => a.is_signed() || b.is_signed(),
            SetExpr::Complement(a) => a.is_signed(),
            SetExpr::Value(v) => v.is_signed(),
        }
    }

    pub fn contains(&self, k: i64) -> bool {
        match self {
            SetExpr::Naturals => k >= 1,
            SetExpr::Integers => true,
            SetExpr::Finite(v) => v.contains(&k),
            SetExpr::Progression { first, step } => {
                k >= *first as i64 && (k - *first as i64) % *step as i64 == 0
            }
            SetExpr::Mirror(a) => a.contains(-k),
            SetExpr::Op(op, a, b) => op.apply(a.contains(k), b.contains(k)),
            SetExpr::Complement(a) => (a.is_signed() || k >= 1) && !a.contains(k),
            SetExpr::Value(v) => v.contains(k),
        }
    }

    /// The canonical set the expression denotes.
    pub fn build(&self) -> Result<SetValue, SetError> {
        Ok(match self {
            SetExpr::Naturals => SetValue::Nat(NatSubset::naturals()),
            SetExpr::Integers => SetValue::Signed(SignedSet::integers()),
            SetExpr::Finite(v) if self.is_signed() => {
                SetValue::Signed(SignedSet::finite(v.iter().copied()))
            }
            SetExpr::Finite(v) => SetValue::Nat(NatSubset::finite(v.iter().map(|&x| x as u64))?),
            SetExpr::Progression { first, step } => {
                SetValue::Nat(NatSubset::progression(*first, *step)?)
            }
            SetExpr::Mirror(a) => a.build()?.mirror(),
            SetExpr::Op(op, a, b) => SetValue::combine(*op, &a.build()?, &b.build()?)?,
            SetExpr::Complement(a) => a.build()?.complement(),
            SetExpr::Value(v) => v.clone(),
        })
    }

    /// Every modulus occurring in the tree's leaves.
    pub fn leaf_moduli(&self) -> Vec<u64> {
        match self {
            SetExpr::Progression { step, .. } => vec![*step],
            SetExpr::Mirror(a) | SetExpr::Complement(a) => a.leaf_moduli(),
            SetExpr::Op(_, a, b) => {
                let mut m = a.leaf_moduli();
                m.extend(b.leaf_moduli());
                m
            }
            SetExpr::Value(v) => v.moduli(),
            _ => vec![1],
        }
    }

    fn is_atom(&self) -> bool {
        !matches!(self, SetExpr::Op(..))
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Naturals => f.write_str("N"),
            SetExpr::Integers => f.write_str("Z"),
            SetExpr::Finite(v) => {
                let items: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
            SetExpr::Progression { first, step } => write!(f, "ap({first}, {step})"),
            SetExpr::Mirror(a) => write!(f, "neg({a})"),
            SetExpr::Op(op, a, b) => {
                let sym = match op {
                    SetOp::Union => "|",
                    SetOp::Intersect => "&",
                    SetOp::Difference => "\\",
                };
                let side = |e: &SetExpr| if e.is_atom() { e.to_string() } else { format!("({e})") };
                write!(f, "{} {sym} {}", side(a), side(b))
            }
            SetExpr::Complement(a) if a.is_atom() => write!(f, "~{a}"),
            SetExpr::Complement(a) => write!(f, "~({a})"),
            SetExpr::Value(v) => write!(f, "({v})"),
        }
    }
}
