use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use super::parser::{Ast, BinOp, CmpOp};
use super::value::Value;
use super::{EvalError, OracleNote, Session};
use crate::gnum::{Class, CritRef, ExpExponent, GrossNumber};
use crate::observer::{CountingSystem, Observation, SystemId, Token};
use crate::oracle::{self, SetExpr};
use crate::posnum::{self, InfNumeral, Sign};
use crate::setmeasure::{product_card, NatSubset, SetOp, SetValue, SignedSet};
use crate::Poly;

/// Longest sequence a single call may produce.
const MAX_LISTING: usize = 10_000;
/// Largest `L` accepted by brute-force checks.
const MAX_CHECK_L: u64 = 100_000_000;

type Result<T> = std::result::Result<T, EvalError>;

fn type_error(expected: &str, got: &Value) -> EvalError {
    EvalError::Type(format!("expected {expected}, got {} {got}", got.type_name()))
}

fn number(v: &Value) -> Result<&GrossNumber> {
    match v {
        Value::Number(n) => Ok(n),
        _ => Err(type_error("a number", v)),
    }
}

fn poly(v: &Value) -> Result<&Poly> {
    number(v)?
        .as_poly()
        .ok_or_else(|| type_error("a gross-polynomial", v))
}

fn set(v: &Value) -> Result<&SetValue> {
    match v {
        Value::Set(s) => Ok(s),
        _ => Err(type_error("a set", v)),
    }
}

fn integer(v: &Value) -> Result<BigInt> {
    number(v)?
        .as_integer()
        .ok_or_else(|| type_error("a finite integer", v))
}

fn small<T: TryFrom<BigInt>>(v: &Value, what: &str) -> Result<T> {
    T::try_from(integer(v)?).map_err(|_| EvalError::Type(format!("{what} {v} is out of range")))
}

fn string(v: &Value) -> Result<&str> {
    match v {
        Value::Str(s) => Ok(s),
        _ => Err(type_error("a string", v)),
    }
}

fn system(v: &Value) -> Result<CountingSystem> {
    match v {
        Value::System(s) => Ok(*s),
        _ => Err(type_error("a counting system", v)),
    }
}

fn token(v: &Value) -> Result<Token> {
    v.as_token().ok_or_else(|| type_error("a token or count", v))
}

fn numeral(v: &Value) -> Result<&InfNumeral> {
    match v {
        Value::Numeral(n) => Ok(n),
        _ => Err(type_error("a numeral", v)),
    }
}

fn arity(name: &str, args: &[Value], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&args.len()) {
        return Ok(());
    }
    let expected = allowed
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" or ");
    Err(EvalError::Arity {
        name: name.to_string(),
        expected,
        got: args.len(),
    })
}

fn finite_set(items: Vec<i64>) -> SetValue {
    if items.iter().any(|&x| x <= 0) {
        SetValue::Signed(SignedSet::finite(items))
    } else {
        SetValue::Nat(NatSubset::finite(items.into_iter().map(|x| x as u64)).expect("positive"))
    }
}

fn offset_crit(c: &CritRef, n: &Value, negate: bool) -> Result<Value> {
    let k: i64 = small(n, "offset")?;
    let k = if negate { -k } else { k };
    Ok(Value::Crit(c.with_offset(c.offset() + k)))
}

fn class_name(c: Class) -> &'static str {
    match c {
        Class::Zero => "zero",
        Class::FinitePositive => "finite positive",
        Class::FiniteNegative => "finite negative",
        Class::InfinitePositive => "infinite positive",
        Class::InfiniteNegative => "infinite negative",
        Class::Infinitesimal => "infinitesimal",
    }
}

fn holds(op: CmpOp, o: Ordering) -> bool {
    match op {
        CmpOp::Lt => o == Ordering::Less,
        CmpOp::Le => o != Ordering::Greater,
        CmpOp::Eq => o == Ordering::Equal,
        CmpOp::Ne => o != Ordering::Equal,
        CmpOp::Ge => o != Ordering::Less,
        CmpOp::Gt => o == Ordering::Greater,
    }
}

fn compare(op: CmpOp, a: &Value, b: &Value) -> Result<bool> {
    let ord = match (a, b) {
        (Value::Number(x), Value::Number(y)) => Some(x.compare(y)?),
        (Value::Numeral(x), Value::Numeral(y)) => Some(posnum::compare_numerals(x, y)?),
        (Value::Token(_) | Value::Observation(_), _) | (_, Value::Token(_) | Value::Observation(_)) => {
            match (a.as_token(), b.as_token()) {
                (Some(x), Some(y)) if matches!(op, CmpOp::Eq | CmpOp::Ne) => {
                    Some(if x == y { Ordering::Equal } else { Ordering::Less })
                }
                (Some(x), Some(y)) => x.cmp_in_system(&y),
                _ => None,
            }
        }
        _ if matches!(op, CmpOp::Eq | CmpOp::Ne) => {
            Some(if a == b { Ordering::Equal } else { Ordering::Less })
        }
        _ => None,
    };
    match ord {
        Some(o) => Ok(holds(op, o)),
        None => Err(EvalError::Type(format!(
            "cannot order {} and {}",
            a.type_name(),
            b.type_name()
        ))),
    }
}

impl Session {
    pub fn eval(&mut self, ast: &Ast) -> Result<Value> {
        match ast {
            Ast::Int(n) => Ok(Value::Number(GrossNumber::P(Poly::constant(n.clone().into())))),
            Ast::Grossone => Ok(Value::Number(GrossNumber::grossone())),
            Ast::Naturals => Ok(Value::Set(SetValue::Nat(NatSubset::naturals()))),
            Ast::Integers => Ok(Value::Set(SetValue::Signed(SignedSet::integers()))),
            Ast::Bool(b) => Ok(Value::Bool(*b)),
            Ast::Str(s) => Ok(Value::Str(s.clone())),
            Ast::Ident(name) => self.lookup(name),
            Ast::SetLit(items) => {
                let mut elems = Vec::with_capacity(items.len());
                for item in items {
                    elems.push(small::<i64>(&self.eval(item)?, "set element")?);
                }
                Ok(Value::Set(finite_set(elems)))
            }
            Ast::SeqLit(items) => Ok(Value::Seq(
                items.iter().map(|a| self.eval(a)).collect::<Result<_>>()?,
            )),
            Ast::Neg(a) => match self.eval(a)? {
                Value::Number(n) => Ok(Value::Number(n.neg()?)),
                v => Err(type_error("a number", &v)),
            },
            Ast::Complement(a) => Ok(Value::Set(set(&self.eval(a)?)?.complement())),
            Ast::Binary(op, a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                binary(*op, &x, &y)
            }
            Ast::Compare(first, rest) => {
                let mut lhs = self.eval(first)?;
                let mut all = true;
                for (op, a) in rest {
                    let rhs = self.eval(a)?;
                    all &= compare(*op, &lhs, &rhs)?;
                    lhs = rhs;
                }
                Ok(Value::Bool(all))
            }
            Ast::Call(name, args) => self.call(name, args),
            Ast::Index(a, i) => {
                let seq = self.eval(a)?;
                let idx: usize = small(&self.eval(i)?, "index")?;
                match seq {
                    Value::Seq(items) => items.get(idx).cloned().ok_or_else(|| {
                        EvalError::Index(format!("index {idx} out of range for {} items", items.len()))
                    }),
                    v => Err(type_error("a sequence", &v)),
                }
            }
            Ast::Let(name, a) => {
                let v = self.eval(a)?;
                self.env.insert(name.clone(), v.clone());
                Ok(v)
            }
        }
    }

    fn lookup(&self, name: &str) -> Result<Value> {
        if let Some(v) = self.env.get(name) {
            return Ok(v.clone());
        }
        if let Ok(id) = name.parse::<SystemId>() {
            return Ok(Value::System(CountingSystem::new(id)));
        }
        if let Some(t) = Token::from_name(name) {
            return Ok(Value::Token(t));
        }
        Err(EvalError::Unbound(name.to_string()))
    }

    /// Reads a set expression as a tree for the brute-force oracle.
    pub fn set_expr(&mut self, ast: &Ast) -> Result<SetExpr> {
        Ok(match ast {
            Ast::Naturals => SetExpr::Naturals,
            Ast::Integers => SetExpr::Integers,
            Ast::SetLit(items) => {
                let mut elems = Vec::with_capacity(items.len());
                for item in items {
                    elems.push(small::<i64>(&self.eval(item)?, "set element")?);
                }
                SetExpr::Finite(elems)
            }
            Ast::Call(name, args) if name == "ap" && args.len() == 2 => SetExpr::Progression {
                first: small(&self.eval(&args[0])?, "progression start")?,
                step: small(&self.eval(&args[1])?, "progression step")?,
            },
            Ast::Call(name, args) if name == "neg" && args.len() == 1 => self.set_expr(&args[0])?.mirror(),
            Ast::Binary(op @ (BinOp::Union | BinOp::Intersect | BinOp::Difference), a, b) => {
                SetExpr::Op(set_op(*op), Box::new(self.set_expr(a)?), Box::new(self.set_expr(b)?))
            }
            Ast::Complement(a) => self.set_expr(a)?.complement(),
            other => SetExpr::Value(set(&self.eval(other)?)?.clone()),
        })
    }

    fn call(&mut self, name: &str, arg_asts: &[Ast]) -> Result<Value> {
        if name == "check" {
            if arg_asts.len() != 2 {
                return Err(EvalError::Arity {
                    name: name.into(),
                    expected: "2".into(),
                    got: arg_asts.len(),
                });
            }
            let expr = self.set_expr(&arg_asts[0])?;
            let l = check_l(&self.eval(&arg_asts[1])?)?;
            return Ok(Value::Report(oracle::check_card(&expr, l)?));
        }
        let args: Vec<Value> = arg_asts.iter().map(|a| self.eval(a)).collect::<Result<_>>()?;
        let a = &args;
        match name {
            "card" => {
                arity(name, a, &[1])?;
                Ok(Value::Number(GrossNumber::P(set(&a[0])?.card())))
            }
            "members" => {
                arity(name, a, &[2])?;
                let n: usize = small(&a[1], "count")?;
                if n > MAX_LISTING {
                    return Err(EvalError::Limit(format!("at most {MAX_LISTING} members")));
                }
                let items = match set(&a[0])? {
                    SetValue::Nat(s) => s.members(n).into_iter().map(|k| k as i64).collect(),
                    SetValue::Signed(s) => signed_members(s, n),
                };
                Ok(Value::Seq(
                    items.into_iter().map(|k| Value::Number(k.into())).collect(),
                ))
            }
            "prodcard" => {
                arity(name, a, &[2])?;
                Ok(Value::Number(product_card(&set(&a[0])?.card(), &set(&a[1])?.card())?))
            }
            "ap" => {
                arity(name, a, &[2])?;
                let first: u64 = small(&a[0], "progression start")?;
                let step: u64 = small(&a[1], "progression step")?;
                Ok(Value::Set(SetValue::Nat(NatSubset::progression(first, step)?)))
            }
            "neg" => {
                arity(name, a, &[1])?;
                Ok(Value::Set(set(&a[0])?.mirror()))
            }
            "numerals" => {
                arity(name, a, &[2])?;
                let base: u64 = small(&a[0], "base")?;
                let length = match &a[1] {
                    Value::Crit(c) => ExpExponent::Crit(c.clone()),
                    v => ExpExponent::Poly(poly(v)?.clone()),
                };
                Ok(Value::Number(posnum::numeral_count(base, &length)?))
            }
            "signedcount" => {
                arity(name, a, &[1])?;
                Ok(Value::Number(posnum::signed_line_count(small(&a[0], "base")?)?))
            }
            "floatcount" => {
                arity(name, a, &[1])?;
                Ok(Value::Number(posnum::float_count(small(&a[0], "base")?)?))
            }
            "critical" => {
                arity(name, a, &[2])?;
                let pair = posnum::critical(small(&a[0], "base")?, poly(&a[1])?)?;
                Ok(Value::Seq(vec![Value::Crit(pair.k1), Value::Crit(pair.k2)]))
            }
            "crit" => {
                arity(name, a, &[2])?;
                let c = CritRef::new(small(&a[0], "base")?, poly(&a[1])?.clone(), 0)?;
                Ok(Value::Crit(c))
            }
            "num" => {
                arity(name, a, &[4, 5])?;
                let base: u64 = small(&a[0], "base")?;
                let b = u32::try_from(base).unwrap_or(0);
                let sign = match a.get(4).map(string).transpose()? {
                    None | Some("") => Sign::Unsigned,
                    Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    Some(s) => return Err(EvalError::Type(format!("sign must be \"+\", \"-\" or \"\", got {s:?}"))),
                };
                let digits = |v: &Value| -> Result<Vec<u8>> {
                    if !(2..=36).contains(&b) {
                        return Err(posnum::NumeralError::InvalidBase(base).into());
                    }
                    Ok(posnum::parse_digits(string(v)?, b)?)
                };
                let numeral = InfNumeral::new(base, poly(&a[1])?.clone(), digits(&a[2])?, digits(&a[3])?, sign)?;
                Ok(Value::Numeral(numeral))
            }
            "succ" => {
                arity(name, a, &[1])?;
                Ok(Value::Numeral(numeral(&a[0])?.successor()?))
            }
            "pred" => {
                arity(name, a, &[1])?;
                Ok(Value::Numeral(numeral(&a[0])?.predecessor()?))
            }
            "first" => {
                arity(name, a, &[3])?;
                let n: usize = small(&a[2], "count")?;
                if n > MAX_LISTING {
                    return Err(EvalError::Limit(format!("at most {MAX_LISTING} numerals")));
                }
                let list = posnum::enumerate_first(small(&a[0], "base")?, poly(&a[1])?.clone(), n)?;
                Ok(Value::Seq(list.into_iter().map(Value::Numeral).collect()))
            }
            "observe" => {
                arity(name, a, &[2])?;
                Ok(Value::Observation(system(&a[0])?.observe(number(&a[1])?)?))
            }
            "wadd" => {
                arity(name, a, &[3])?;
                let sys = system(&a[0])?;
                let t = sys.weak_add(&token(&a[1])?, &token(&a[2])?)?;
                Ok(Value::Observation(Observation {
                    system: sys.id(),
                    token: t,
                }))
            }
            "distinct" => {
                arity(name, a, &[3])?;
                Ok(Value::Bool(system(&a[0])?.distinguishable(number(&a[1])?, number(&a[2])?)?))
            }
            "munduruku" => {
                arity(name, a, &[1])?;
                Ok(Value::System(CountingSystem::munduruku(small(&a[0], "threshold")?)?))
            }
            "subst" => {
                arity(name, a, &[2])?;
                let l = integer(&a[1])?;
                if !l.is_positive() {
                    return Err(oracle::OracleError::InvalidL(format!("{l} is not positive")).into());
                }
                Ok(Value::Number(oracle::subst(number(&a[0])?, &l)?.into()))
            }
            "checkorder" => {
                if a.len() < 3 {
                    return Err(EvalError::Arity {
                        name: name.into(),
                        expected: "at least 3".into(),
                        got: a.len(),
                    });
                }
                let ls = a[2..].iter().map(integer).collect::<Result<Vec<_>>>()?;
                let r = oracle::check_order(number(&a[0])?, number(&a[1])?, &ls)?;
                Ok(Value::Bool(r.matched))
            }
            "classify" => {
                arity(name, a, &[1])?;
                Ok(Value::Str(class_name(number(&a[0])?.classify()).into()))
            }
            _ => Err(EvalError::UnknownFunction(name.to_string())),
        }
    }

    /// The finite-substitution check for a statement's result: a brute-force
    /// count when it is `card(…)`, otherwise the substituted number.
    pub fn oracle_note(&mut self, ast: &Ast, value: &Value, l: u64) -> Option<Result<OracleNote>> {
        match (ast, value) {
            (Ast::Let(_, inner), _) => self.oracle_note(inner, value, l),
            (Ast::Call(name, args), Value::Number(_)) if name == "card" && args.len() == 1 => {
                Some(self.set_expr(&args[0]).and_then(|e| {
                    oracle::check_card(&e, check_l(&Value::Number(GrossNumber::from(crate::Rational::from_integer(BigInt::from(l)))))?)
                        .map(OracleNote::Card)
                        .map_err(EvalError::from)
                }))
            }
            (_, Value::Number(n)) => Some(
                oracle::subst(n, &BigInt::from(l))
                    .map(|v| OracleNote::Subst { l, value: v })
                    .map_err(EvalError::from),
            ),
            _ => None,
        }
    }
}

fn check_l(v: &Value) -> Result<u64> {
    let l: u64 = small(v, "L")?;
    if l > MAX_CHECK_L {
        return Err(EvalError::Limit(format!("L at most {MAX_CHECK_L}")));
    }
    Ok(l)
}

fn set_op(op: BinOp) -> SetOp {
    match op {
        BinOp::Union => SetOp::Union,
        BinOp::Intersect => SetOp::Intersect,
        _ => SetOp::Difference,
    }
}

fn binary(op: BinOp, x: &Value, y: &Value) -> Result<Value> {
    match (op, x, y) {
        (BinOp::Union | BinOp::Intersect | BinOp::Difference, _, _) => {
            Ok(Value::Set(SetValue::combine(set_op(op), set(x)?, set(y)?)?))
        }
        (BinOp::Add, Value::Crit(c), n) | (BinOp::Add, n, Value::Crit(c)) => offset_crit(c, n, false),
        (BinOp::Sub, Value::Crit(c), n) => offset_crit(c, n, true),
        (BinOp::Pow, Value::Number(_), Value::Crit(c)) => {
            let base: u64 = small(x, "base").map_err(|_| type_error("an integer base", x))?;
            Ok(Value::Number(crate::gnum::pow_count(base, &ExpExponent::Crit(c.clone()))?))
        }
        _ => {
            let (a, b) = (number(x)?, number(y)?);
            Ok(Value::Number(match op {
                BinOp::Add => a.add(b)?,
                BinOp::Sub => a.sub(b)?,
                BinOp::Mul => a.mul(b)?,
                BinOp::Div => a.div_exact(b)?,
                _ => a.pow(b)?,
            }))
        }
    }
}

/// The `n` elements of smallest absolute value, listed `0, 1, -1, 2, -2, …`.
fn signed_members(s: &SignedSet, n: usize) -> Vec<i64> {
    if s.negatives().is_finite() && s.positives().is_finite() {
        let mut all: Vec<i64> = s.negatives().added().iter().map(|&k| -(k as i64)).collect();
        if s.has_zero() {
            all.push(0);
        }
        all.extend(s.positives().added().iter().map(|&k| k as i64));
        all.sort_by_key(|k| (k.unsigned_abs(), *k < 0));
        all.truncate(n);
        return all;
    }
    (0i64..)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
        .filter(|&k| s.contains(k))
        .take(n)
        .collect()
}
