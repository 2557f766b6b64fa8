use std::fmt;

use crate::gnum::{render, CritRef, GrossNumber};
use crate::observer::{CountingSystem, Observation, SystemId, Token};
use crate::oracle::SubstReport;
use crate::posnum::InfNumeral;
use crate::setmeasure::SetValue;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Number(GrossNumber),
    Set(SetValue),
    Numeral(InfNumeral),
    Observation(Observation),
    Token(Token),
    System(CountingSystem),
    Bool(bool),
    Seq(Vec<Value>),
    /// A symbolic digit length such as `crit(10, G) + 1`.
    Crit(CritRef),
    Str(String),
    Report(SubstReport),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Number(_) => "number",
            Value::Set(SetValue::Nat(_)) => "set",
            Value::Set(SetValue::Signed(_)) => "signedset",
            Value::Numeral(_) => "numeral",
            Value::Observation(_) => "observation",
            Value::Token(_) => "token",
            Value::System(_) => "system",
            Value::Bool(_) => "bool",
            Value::Seq(_) => "sequence",
            Value::Crit(_) => "critexp",
            Value::Str(_) => "string",
            Value::Report(_) => "report",
        }
    }

    /// The token this value denotes in a counting system, if any.
    pub fn as_token(&self) -> Option<Token> {
        match self {
            Value::Token(t) => Some(t.clone()),
            Value::Observation(o) => Some(o.token.clone()),
            Value::Number(n) => Some(Token::Exact(n.clone())),
            _ => None,
        }
    }
}

impl From<GrossNumber> for Value {
    fn from(n: GrossNumber) -> Self {
        Value::Number(n)
    }
}

impl From<SetValue> for Value {
    fn from(s: SetValue) -> Self {
        Value::Set(s)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(n) => n.fmt(f),
            Value::Set(s) => s.fmt(f),
            Value::Numeral(n) => n.fmt(f),
            Value::Observation(o) => o.fmt(f),
            Value::Token(t) => t.fmt(f),
            Value::System(s) if s.id() == SystemId::Munduruku => {
                let default = CountingSystem::new(SystemId::Munduruku);
                if *s == default {
                    f.write_str("munduruku")
                } else {
                    write!(f, "munduruku({})", s.threshold())
                }
            }
            Value::System(s) => s.id().fmt(f),
            Value::Bool(b) => b.fmt(f),
            Value::Seq(items) => {
                let parts: Vec<String> = items.iter().map(Value::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Crit(c) => f.write_str(&render::crit(c)),
            Value::Str(s) => write!(f, "{s:?}"),
            Value::Report(r) => write!(
                f,
                "{} at L = {}: symbolic {} vs brute {} ({})",
                r.expression,
                r.l,
                render::rational(&r.symbolic),
                render::rational(&r.brute),
                if r.matched { "match" } else { "MISMATCH" }
            ),
        }
    }
}
