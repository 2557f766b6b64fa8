use std::fmt;

use num_bigint::BigInt;

use super::lexer::{lex, Spanned, Tok};
use super::SyntaxError;

const MAX_NESTING: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Union,
    Intersect,
    Difference,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Int(BigInt),
    Grossone,
    Naturals,
    Integers,
    Bool(bool),
    Str(String),
    Ident(String),
    SetLit(Vec<Ast>),
    SeqLit(Vec<Ast>),
    Neg(Box<Ast>),
    Complement(Box<Ast>),
    Binary(BinOp, Box<Ast>, Box<Ast>),
    /// `a < b <= c …`, true when every adjacent pair holds.
    Compare(Box<Ast>, Vec<(CmpOp, Ast)>),
    Call(String, Vec<Ast>),
    Index(Box<Ast>, Box<Ast>),
    Let(String, Box<Ast>),
}

impl BinOp {
    fn name(self) -> &'static str {
        match self {
            BinOp::Add => "add",
            BinOp::Sub => "sub",
            BinOp::Mul => "mul",
            BinOp::Div => "div",
            BinOp::Pow => "pow",
            BinOp::Union => "union",
            BinOp::Intersect => "intersect",
            BinOp::Difference => "difference",
        }
    }
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "==",
            CmpOp::Ne => "!=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }
}

fn list(items: &[Ast]) -> String {
    items.iter().map(Ast::to_string).collect::<Vec<_>>().join(", ")
}

/// Prefix form, e.g. `add(mul(2, G), 1)`.
impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Int(n) => write!(f, "{n}"),
            Ast::Grossone => f.write_str("G"),
            Ast::Naturals => f.write_str("N"),
            Ast::Integers => f.write_str("Z"),
            Ast::Bool(b) => write!(f, "{b}"),
            Ast::Str(s) => write!(f, "{s:?}"),
            Ast::Ident(s) => f.write_str(s),
            Ast::SetLit(v) => write!(f, "set({})", list(v)),
            Ast::SeqLit(v) => write!(f, "seq({})", list(v)),
            Ast::Neg(a) => write!(f, "neg({a})"),
            Ast::Complement(a) => write!(f, "complement({a})"),
            Ast::Binary(op, a, b) => write!(f, "{}({a}, {b})", op.name()),
            Ast::Compare(first, rest) => {
                write!(f, "compare({first}")?;
                for (op, a) in rest {
                    write!(f, " {} {a}", op.symbol())?;
                }
                f.write_str(")")
            }
            Ast::Call(name, args) => write!(f, "call({name}{}{})", if args.is_empty() { "" } else { ", " }, list(args)),
            Ast::Index(a, i) => write!(f, "index({a}, {i})"),
            Ast::Let(name, a) => write!(f, "let({name}, {a})"),
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

/// Parses one statement: an expression or `let name = expression`.
pub fn parse(src: &str) -> Result<Ast, SyntaxError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        depth: 0,
    };
    let ast = p.statement()?;
    p.expect_eof()?;
    Ok(ast)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SyntaxError {
        let s = &self.toks[self.pos];
        SyntaxError::new(s.line, s.column, expected, &s.tok.describe())
    }

    fn at(&self, sym: &str) -> bool {
        matches!(self.peek(), Tok::Sym(s) if *s == sym)
    }

    fn eat(&mut self, sym: &str) -> bool {
        if self.at(sym) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<(), SyntaxError> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.error(&format!("'{sym}'")))
        }
    }

    fn expect_eof(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => Err(self.error("an operator or end of input")),
        }
    }

    fn statement(&mut self) -> Result<Ast, SyntaxError> {
        if matches!(self.peek(), Tok::Ident(s) if s == "let") {
            self.bump();
            let start = self.pos;
            let name = match self.bump() {
                Tok::Ident(s) if !is_reserved(&s) => s,
                _ => {
                    self.pos = start;
                    return Err(self.error("a name to bind"));
                }
            };
            self.expect("=")?;
            let value = self.expr()?;
            return Ok(Ast::Let(name, Box::new(value)));
        }
        self.expr()
    }

    fn expr(&mut self) -> Result<Ast, SyntaxError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.error("less deeply nested expression"));
        }
        let r = self.comparison();
        self.depth -= 1;
        r
    }

    fn comparison(&mut self) -> Result<Ast, SyntaxError> {
        let first = self.union()?;
        let mut rest = Vec::new();
        loop {
            let op = match self.peek() {
                Tok::Sym("<") => CmpOp::Lt,
                Tok::Sym("<=") => CmpOp::Le,
                Tok::Sym("==") => CmpOp::Eq,
                Tok::Sym("!=") => CmpOp::Ne,
                Tok::Sym(">=") => CmpOp::Ge,
                Tok::Sym(">") => CmpOp::Gt,
                _ => break,
            };
            self.bump();
            rest.push((op, self.union()?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Ast::Compare(Box::new(first), rest)
        })
    }

    fn union(&mut self) -> Result<Ast, SyntaxError> {
        let mut lhs = self.intersection()?;
        while self.eat("|") {
            let rhs = self.intersection()?;
            lhs = Ast::Binary(BinOp::Union, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn intersection(&mut self) -> Result<Ast, SyntaxError> {
        let mut lhs = self.additive()?;
        loop {
            let op = if self.eat("&") {
                BinOp::Intersect
            } else if self.eat("\\") {
                BinOp::Difference
            } else {
                return Ok(lhs);
            };
            let rhs = self.additive()?;
            lhs = Ast::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn additive(&mut self) -> Result<Ast, SyntaxError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = if self.eat("+") {
                BinOp::Add
            } else if self.eat("-") {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.multiplicative()?;
            lhs = Ast::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn multiplicative(&mut self) -> Result<Ast, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat("*") {
                BinOp::Mul
            } else if self.eat("/") {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Ast::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Ast, SyntaxError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.error("less deeply nested expression"));
        }
        let r = if self.eat("-") {
            self.unary().map(|a| Ast::Neg(Box::new(a)))
        } else if self.eat("~") {
            self.unary().map(|a| Ast::Complement(Box::new(a)))
        } else {
            self.power()
        };
        self.depth -= 1;
        r
    }

    fn power(&mut self) -> Result<Ast, SyntaxError> {
        let base = self.postfix()?;
        if self.eat("^") {
            let exp = self.unary()?;
            return Ok(Ast::Binary(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<Ast, SyntaxError> {
        let mut a = self.atom()?;
        loop {
            if self.eat("[") {
                let i = self.expr()?;
                self.expect("]")?;
                a = Ast::Index(Box::new(a), Box::new(i));
            } else if self.at("{") && matches!(&a, Ast::Call(n, args) if n == "num" && args.len() == 2) {
                self.bump();
                a = self.numeral_record(a)?;
            } else {
                return Ok(a);
            }
        }
    }

    /// `num(b, len){head: "…", tail: "…", sign: "…"}`.
    fn numeral_record(&mut self, call: Ast) -> Result<Ast, SyntaxError> {
        let Ast::Call(name, mut args) = call else {
            unreachable!("checked by caller")
        };
        let mut fields: [Option<Ast>; 3] = [None, None, None];
        if !self.at("}") {
            loop {
                let start = self.pos;
                let slot = match self.bump() {
                    Tok::Ident(s) if s == "head" => 0,
                    Tok::Ident(s) if s == "tail" => 1,
                    Tok::Ident(s) if s == "sign" => 2,
                    _ => {
                        self.pos = start;
                        return Err(self.error("head, tail or sign"));
                    }
                };
                self.expect(":")?;
                fields[slot] = Some(self.expr()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect("}")?;
        let [head, tail, sign] = fields;
        args.push(head.unwrap_or(Ast::Str(String::new())));
        args.push(tail.unwrap_or(Ast::Str(String::new())));
        if let Some(s) = sign {
            args.push(s);
        }
        Ok(Ast::Call(name, args))
    }

    fn comma_list(&mut self, close: &str) -> Result<Vec<Ast>, SyntaxError> {
        let mut items = Vec::new();
        if self.eat(close) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if self.eat(close) {
                return Ok(items);
            }
            if !self.eat(",") {
                return Err(self.error(&format!("',' or '{close}'")));
            }
        }
    }

    fn atom(&mut self) -> Result<Ast, SyntaxError> {
        let start = self.pos;
        match self.bump() {
            Tok::Int(n) => Ok(Ast::Int(n)),
            Tok::Str(s) => Ok(Ast::Str(s)),
            Tok::Sym("(") => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Tok::Sym("{") => Ok(Ast::SetLit(self.comma_list("}")?)),
            Tok::Sym("[") => Ok(Ast::SeqLit(self.comma_list("]")?)),
            Tok::Ident(s) => Ok(match s.as_str() {
                "G" => Ast::Grossone,
                "N" => Ast::Naturals,
                "Z" => Ast::Integers,
                "true" => Ast::Bool(true),
                "false" => Ast::Bool(false),
                "let" => {
                    self.pos = start;
                    return Err(self.error("an expression (let is only allowed at the start)"));
                }
                _ if self.eat("(") => Ast::Call(s, self.comma_list(")")?),
                _ => Ast::Ident(s),
            }),
            _ => {
                self.pos = start;
                Err(self.error("an expression"))
            }
        }
    }
}

fn is_reserved(s: &str) -> bool {
    matches!(s, "G" | "N" | "Z" | "true" | "false" | "let")
}
