//! A small exact expression language used by the family tables.
//!
//! Expressions are rational arithmetic in single-letter variables
//! (`n`, `m`, `k`, `a`, `b`) with comparisons and boolean connectives:
//!
//! ```text
//! n>=2 & -1<=m<=(n-5)/3
//! 1-1/(n^2-n+nm-4m-3)
//! ```
//!
//! Juxtaposition multiplies (`6nm` is `6*n*m`), `^` takes an integer
//! exponent and binds tighter than juxtaposition, `%` is the non-negative
//! remainder of two integers. Comparisons chain, so `a<=b<c` means
//! `a<=b & b<c`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

const VARIABLES: &str = "nmkab";

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Num(BigInt),
    Word(String),
    Sym(&'static str),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Num(n) => write!(f, "{n}"),
            Token::Word(w) => write!(f, "{w}"),
            Token::Sym(s) => write!(f, "{s}"),
        }
    }
}

const SYMBOLS: [&str; 21] = [
    "--", "..", "<=", ">=", "==", "!=", "<", ">", "+", "-", "*", "/", "^", "%", "(", ")", ",", "&", "|", ":", ";",
];
const EXTRA: [&str; 2] = ["#", "="];

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Num(src[start..i].parse().expect("digits")));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token::Word(src[start..i].to_string()));
            continue;
        }
        for s in SYMBOLS.iter().chain(EXTRA.iter()) {
            if src[i..].starts_with(s) {
                out.push(Token::Sym(s));
                i += s.len();
                continue 'outer;
            }
        }
        return Err(Error::Parse(format!("unexpected character {:?} in {src:?}", c as char)));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

/// A parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Var(char),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i32),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Chain(Vec<Expr>, Vec<Rel>),
    And(Vec<Expr>),
    Or(Vec<Expr>),
}

/// Result of evaluating an [`Expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Num(Rational),
    Bool(bool),
}

/// Variable bindings.
#[derive(Clone, Debug, Default)]
pub struct Env(BTreeMap<char, Rational>);

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    pub fn with(mut self, var: char, value: Rational) -> Env {
        self.0.insert(var, value);
        self
    }

    pub fn set(&mut self, var: char, value: Rational) {
        self.0.insert(var, value);
    }

    pub fn get(&self, var: char) -> Option<&Rational> {
        self.0.get(&var)
    }
}

impl Expr {
    /// Parses a complete expression.
    pub fn parse(src: &str) -> Result<Expr> {
        let toks = tokenize(src)?;
        let mut p = Parser::new(&toks);
        let e = p.expr()?;
        if !p.done() {
            return Err(Error::Parse(format!("trailing input after expression in {src:?}")));
        }
        Ok(e)
    }

    pub fn eval(&self, env: &Env) -> Result<Value> {
        use Value::*;
        Ok(match self {
            Expr::Num(q) => Num(q.clone()),
            Expr::Var(v) => Num(env.get(*v).cloned().ok_or_else(|| Error::Family(format!("unbound variable {v}")))?),
            Expr::Neg(e) => Num(-e.num(env)?),
            Expr::Pow(e, k) => {
                let base = e.num(env)?;
                if base.is_zero() && *k < 0 {
                    return Err(Error::Family("zero to a negative power".into()));
                }
                Num(base.pow(*k))
            }
            Expr::Bin(op, l, r) => {
                let (l, r) = (l.num(env)?, r.num(env)?);
                Num(match op {
                    BinOp::Add => l + r,
                    BinOp::Sub => l - r,
                    BinOp::Mul => l * r,
                    BinOp::Div => {
                        if r.is_zero() {
                            return Err(Error::Family("division by zero".into()));
                        }
                        l / r
                    }
                    BinOp::Rem => {
                        if !l.is_integer() || !r.is_integer() || r.is_zero() {
                            return Err(Error::Family("% needs integers and a nonzero modulus".into()));
                        }
                        Rational::from_integer(l.to_integer().mod_floor(&r.to_integer().abs()))
                    }
                })
            }
            Expr::Chain(xs, rels) => {
                let vals: Vec<Rational> = xs.iter().map(|x| x.num(env)).collect::<Result<_>>()?;
                Bool(rels.iter().enumerate().all(|(i, rel)| {
                    let (l, r) = (&vals[i], &vals[i + 1]);
                    match rel {
                        Rel::Lt => l < r,
                        Rel::Le => l <= r,
                        Rel::Gt => l > r,
                        Rel::Ge => l >= r,
                        Rel::Eq => l == r,
                        Rel::Ne => l != r,
                    }
                }))
            }
            Expr::And(xs) => {
                for x in xs {
                    if !x.truth(env)? {
                        return Ok(Bool(false));
                    }
                }
                Bool(true)
            }
            Expr::Or(xs) => {
                for x in xs {
                    if x.truth(env)? {
                        return Ok(Bool(true));
                    }
                }
                Bool(false)
            }
        })
    }

    /// Evaluates to a number; booleans are an error.
    pub fn num(&self, env: &Env) -> Result<Rational> {
        match self.eval(env)? {
            Value::Num(q) => Ok(q),
            Value::Bool(_) => Err(Error::Family("expected a number, found a condition".into())),
        }
    }

    /// Evaluates to a boolean; numbers are an error.
    pub fn truth(&self, env: &Env) -> Result<bool> {
        match self.eval(env)? {
            Value::Bool(b) => Ok(b),
            Value::Num(_) => Err(Error::Family("expected a condition, found a number".into())),
        }
    }

    /// Evaluates to an integer that fits in `i64`.
    pub fn int(&self, env: &Env) -> Result<i64> {
        let q = self.num(env)?;
        if !q.is_integer() {
            return Err(Error::Family(format!("expected an integer, got {q}")));
        }
        q.to_integer().to_i64().ok_or_else(|| Error::Family("integer out of range".into()))
    }
}

/// Recursive-descent parser over a token slice. Public within the crate so
/// the table readers can interleave their own syntax with expressions.
pub(crate) struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(toks: &'a [Token]) -> Parser<'a> {
        Parser { toks, pos: 0 }
    }

    pub(crate) fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    pub(crate) fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    pub(crate) fn at(&self, sym: &str) -> bool {
        matches!(self.peek(), Some(Token::Sym(s)) if *s == sym)
    }

    pub(crate) fn eat(&mut self, sym: &str) -> bool {
        if self.at(sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, sym: &str) -> Result<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {sym:?}")))
        }
    }

    pub(crate) fn word(&mut self) -> Result<&'a str> {
        match self.next() {
            Some(Token::Word(w)) => Ok(w),
            _ => {
                self.pos -= 1;
                Err(self.error("expected a name"))
            }
        }
    }

    pub(crate) fn integer(&mut self) -> Result<i64> {
        let neg = self.eat("-");
        match self.next() {
            Some(Token::Num(n)) => {
                let v = n.to_i64().ok_or_else(|| self.error("integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    pub(crate) fn error(&self, what: &str) -> Error {
        let near: Vec<String> = self.toks[self.pos.min(self.toks.len())..].iter().take(6).map(|t| t.to_string()).collect();
        Error::Parse(format!("{what} near `{}`", near.join(" ")))
    }

    pub(crate) fn expr(&mut self) -> Result<Expr> {
        let mut xs = vec![self.conj()?];
        while self.eat("|") {
            xs.push(self.conj()?);
        }
        Ok(if xs.len() == 1 { xs.pop().unwrap() } else { Expr::Or(xs) })
    }

    fn conj(&mut self) -> Result<Expr> {
        let mut xs = vec![self.chain()?];
        while self.eat("&") {
            xs.push(self.chain()?);
        }
        Ok(if xs.len() == 1 { xs.pop().unwrap() } else { Expr::And(xs) })
    }

    fn rel(&self) -> Option<Rel> {
        match self.peek() {
            Some(Token::Sym(s)) => match *s {
                "<" => Some(Rel::Lt),
                "<=" => Some(Rel::Le),
                ">" => Some(Rel::Gt),
                ">=" => Some(Rel::Ge),
                "==" => Some(Rel::Eq),
                "!=" => Some(Rel::Ne),
                _ => None,
            },
            _ => None,
        }
    }

    fn chain(&mut self) -> Result<Expr> {
        let first = self.sum()?;
        let mut xs = vec![first];
        let mut rels = Vec::new();
        while let Some(r) = self.rel() {
            self.pos += 1;
            rels.push(r);
            xs.push(self.sum()?);
        }
        Ok(if rels.is_empty() { xs.pop().unwrap() } else { Expr::Chain(xs, rels) })
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        loop {
            let op = if self.at("+") {
                BinOp::Add
            } else if self.at("-") {
                BinOp::Sub
            } else {
                return Ok(e);
            };
            self.pos += 1;
            e = Expr::Bin(op, Box::new(e), Box::new(self.product()?));
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(Token::Num(_)) => true,
            Some(Token::Word(w)) => is_var_word(w),
            Some(Token::Sym("(")) => true,
            _ => false,
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            let op = if self.at("*") {
                self.pos += 1;
                BinOp::Mul
            } else if self.at("/") {
                self.pos += 1;
                BinOp::Div
            } else if self.at("%") {
                self.pos += 1;
                BinOp::Rem
            } else if self.starts_atom() {
                BinOp::Mul
            } else {
                return Ok(e);
            };
            let rhs = if op == BinOp::Mul { self.power()? } else { self.unary()? };
            e = Expr::Bin(op, Box::new(e), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat("+") {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat("^") {
            let k = self.integer()?;
            let k = i32::try_from(k).map_err(|_| self.error("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Expr::Num(Rational::from_integer(n.clone()))),
            Some(Token::Word(w)) if is_var_word(w) => {
                // `nm` is the product of `n` and `m`; a trailing `^` applies
                // to the last letter only.
                let mut chars = w.chars();
                let mut e = Expr::Var(chars.next().unwrap());
                for c in chars {
                    e = Expr::Bin(BinOp::Mul, Box::new(e), Box::new(Expr::Var(c)));
                }
                if let Expr::Bin(_, _, _) = e {
                    if self.at("^") {
                        return Err(self.error("write the power of a product with parentheses"));
                    }
                }
                Ok(e)
            }
            Some(Token::Sym("(")) => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a number, variable or `(`"))
            }
        }
    }
}

fn is_var_word(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| VARIABLES.contains(c))
}
