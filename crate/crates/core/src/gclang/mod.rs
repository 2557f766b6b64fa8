//! `gc`, the expression language over gross-numbers, measured sets,
//! positional numerals and counting systems.
//!
//! ```text
//! card({3,4,5,69} | (ap(4,5) & ap(3,11)))   # G/55 + 3
//! 2^G < 10^G                                # true
//! observe(piraha, 3)                        # many
//! ```
//!
//! Precedence from loosest: comparisons (chainable), `|`, `&` and `\`,
//! `+ -`, `* /`, unary `-` and `~`, `^` (right associative).

mod eval;
mod lexer;
mod parser;
mod value;

use std::collections::HashMap;
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::gnum::{render, GrossError};
use crate::observer::ObserverError;
use crate::oracle::{OracleError, SubstReport};
use crate::posnum::NumeralError;
use crate::setmeasure::SetError;
use crate::Rational;

pub use parser::{parse, Ast, BinOp, CmpOp};
pub use value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {expected}, found {found}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

impl SyntaxError {
    fn new(line: usize, column: usize, expected: &str, found: &str) -> Self {
        SyntaxError {
            line,
            column,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Gross(#[from] GrossError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Numeral(#[from] NumeralError),
    #[error(transparent)]
    Observer(#[from] ObserverError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Type(String),
    #[error("unbound identifier {0}")]
    Unbound(String),
    #[error("unknown function {0}")]
    UnknownFunction(String),
    #[error("{name} takes {expected} arguments, got {got}")]
    Arity {
        name: String,
        expected: String,
        got: usize,
    },
    #[error("{0}")]
    Index(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
}

fn gross_kind(e: &GrossError) -> &'static str {
    match e {
        GrossError::UnsupportedSum(_) => "UnsupportedSum",
        GrossError::UnsupportedProduct(_) => "UnsupportedProduct",
        GrossError::DivisionByZero => "DivisionByZero",
        GrossError::NonExactDivision(_) => "NonExactDivision",
        GrossError::NegativeExponent => "NegativeExponent",
        GrossError::UnsupportedExponent(_) => "UnsupportedExponent",
        GrossError::Undetermined(_) => "Undetermined",
        GrossError::DepthExceeded(_) => "DepthExceeded",
        GrossError::NotInfinite(_) => "NotInfinite",
        GrossError::NotInteger(_) => "NotInteger",
        GrossError::CapExceeded(_) => "CapExceeded",
    }
}

impl EvalError {
    /// Stable machine-readable name of the failure.
    pub fn kind(&self) -> &'static str {
        match self {
            EvalError::Gross(e)
            | EvalError::Numeral(NumeralError::Gross(e))
            | EvalError::Observer(ObserverError::Gross(e))
            | EvalError::Oracle(OracleError::Gross(e)) => gross_kind(e),
            EvalError::Set(e) | EvalError::Oracle(OracleError::Set(e)) => match e {
                SetError::InvalidProgression { .. } => "InvalidProgression",
                SetError::ModulusTooLarge(_) => "ModulusTooLarge",
                SetError::NotNatural(_) => "NotNatural",
            },
            EvalError::Numeral(e) => match e {
                NumeralError::InvalidBase(_) => "InvalidBase",
                NumeralError::InvalidDigit { .. } => "InvalidDigit",
                NumeralError::InvalidLength(_) => "InvalidLength",
                NumeralError::Overlap { .. } => "Overlap",
                NumeralError::IncomparableSystems => "IncomparableSystems",
                NumeralError::Overflow => "Overflow",
                NumeralError::Underflow => "Underflow",
                NumeralError::Unrepresentable => "Unrepresentable",
                NumeralError::Gross(_) => unreachable!(),
            },
            EvalError::Observer(e) => match e {
                ObserverError::NegativeCount(_) => "NegativeCount",
                ObserverError::NotACount(_) => "NotACount",
                ObserverError::ForeignToken { .. } => "ForeignToken",
                ObserverError::InvalidThreshold(_) => "InvalidThreshold",
                ObserverError::UnknownSystem(_) => "UnknownSystem",
                ObserverError::Gross(_) => unreachable!(),
            },
            EvalError::Oracle(e) => match e {
                OracleError::NonIntegerExponent(_) => "NonIntegerExponent",
                OracleError::ExponentTooLarge(_) => "ExponentTooLarge",
                OracleError::CritRefNotSubstitutable(_) => "CritRefNotSubstitutable",
                OracleError::InvalidL(_) => "InvalidL",
                OracleError::Gross(_) | OracleError::Set(_) => unreachable!(),
            },
            EvalError::Type(_) => "TypeError",
            EvalError::Unbound(_) => "UnboundIdentifier",
            EvalError::UnknownFunction(_) => "UnknownFunction",
            EvalError::Arity { .. } => "ArityError",
            EvalError::Index(_) => "IndexError",
            EvalError::Limit(_) => "LimitExceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcError {
    #[error("syntax error: {0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Eval(#[from] EvalError),
}

impl GcError {
    pub fn kind(&self) -> &'static str {
        match self {
            GcError::Syntax(_) => "SyntaxError",
            GcError::Eval(e) => e.kind(),
        }
    }

    pub fn detail(&self) -> String {
        match self {
            GcError::Syntax(e) => e.to_string(),
            GcError::Eval(e) => e.to_string(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"error": {"kind": self.kind(), "detail": self.detail()}})
    }
}

/// Result of the finite-substitution check attached to a statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleNote {
    Card(SubstReport),
    Subst { l: u64, value: Rational },
}

impl OracleNote {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            OracleNote::Card(r) => json!({
                "L": r.l.to_string(),
                "symbolic": render::rational(&r.symbolic),
                "brute": render::rational(&r.brute),
                "match": r.matched,
            }),
            OracleNote::Subst { l, value } => json!({
                "L": l.to_string(),
                "subst": render::rational(value),
            }),
        }
    }
}

impl fmt::Display for OracleNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleNote::Card(r) => write!(
                f,
                "oracle L={}: symbolic {} = brute {}: {}",
                r.l,
                render::rational(&r.symbolic),
                render::rational(&r.brute),
                if r.matched { "match" } else { "MISMATCH" }
            ),
            OracleNote::Subst { l, value } => {
                write!(f, "oracle L={l}: value {}", render::rational(value))
            }
        }
    }
}

/// An evaluation environment holding `let` bindings.
#[derive(Clone, Debug, Default)]
pub struct Session {
    env: HashMap<String, Value>,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.env.get(name)
    }

    /// Parses and evaluates one statement.
    pub fn run(&mut self, src: &str) -> Result<Value, GcError> {
        let ast = parse(src)?;
        Ok(self.eval(&ast)?)
    }
}

/// Evaluates one statement in a fresh session.
pub fn eval_str(src: &str) -> Result<Value, GcError> {
    Session::new().run(src)
}

/// Canonical text of a value.
pub fn render(v: &Value) -> String {
    v.to_string()
}

/// `{"input", "value", "type"}` for a successful evaluation.
pub fn value_json(input: &str, v: &Value) -> serde_json::Value {
    json!({"input": input, "value": render(v), "type": v.type_name()})
}
