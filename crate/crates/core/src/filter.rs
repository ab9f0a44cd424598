//! A tiny predicate language over array parameters, e.g. `3*c2 > k && D >= 4`.
//!
//! Grammar: a conjunction (`&&`, `and` or `,`) of comparisons
//! (`<`, `<=`, `>`, `>=`, `==`, `!=`) between integer expressions built from
//! literals, the variables `k`, `D`, `bN`, `cN`, `aN`, unary minus, `+`, `-`,
//! `*` and parentheses. There is no division, so every test is exact.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    K,
    D,
    B(usize),
    C(usize),
    A(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::K => f.write_str("k"),
            Var::D => f.write_str("D"),
            Var::B(i) => write!(f, "b{i}"),
            Var::C(i) => write!(f, "c{i}"),
            Var::A(i) => write!(f, "a{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterError {
    Syntax {
        pos: usize,
        msg: String,
    },
    /// A variable index outside `0..=D` (`0..D` for `b`).
    IndexOutOfRange {
        var: String,
        diameter: usize,
    },
    Overflow,
}

impl fmt::Display for FilterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterError::Syntax { pos, msg } => write!(f, "filter syntax error at byte {pos}: {msg}"),
            FilterError::IndexOutOfRange { var, diameter } => {
                write!(f, "filter variable `{var}` does not exist for diameter {diameter}")
            }
            FilterError::Overflow => f.write_str("filter arithmetic overflowed"),
        }
    }
}

impl core::error::Error for FilterError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Lit(i128),
    Var(Var),
    Neg(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Comparison {
    lhs: Expr,
    cmp: Cmp,
    rhs: Expr,
    vars: Vec<Var>,
}

/// A parsed filter. The empty filter accepts everything.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Filter {
    source: String,
    conjuncts: Vec<Comparison>,
}

impl Filter {
    pub fn parse(src: &str) -> Result<Filter, FilterError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut conjuncts = Vec::new();
        p.skip_ws();
        if p.pos < p.src.len() {
            loop {
                conjuncts.push(p.comparison()?);
                p.skip_ws();
                if p.eat("&&") || p.eat_word("and") || p.eat(",") {
                    continue;
                }
                if p.pos < p.src.len() {
                    return Err(p.error("expected `&&`, `and`, `,` or end of input"));
                }
                break;
            }
        }
        Ok(Filter {
            source: src.trim().to_string(),
            conjuncts,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn is_empty(&self) -> bool {
        self.conjuncts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.conjuncts.len()
    }

    /// Every variable of conjunct `i`.
    pub fn vars(&self, i: usize) -> &[Var] {
        &self.conjuncts[i].vars
    }

    /// Rejects variables that do not exist at diameter `d`.
    pub fn check_diameter(&self, d: usize) -> Result<(), FilterError> {
        for v in self.conjuncts.iter().flat_map(|c| c.vars.iter()) {
            let ok = match *v {
                Var::K | Var::D => true,
                Var::B(i) => i < d,
                Var::C(i) | Var::A(i) => i <= d,
            };
            if !ok {
                return Err(FilterError::IndexOutOfRange {
                    var: v.to_string(),
                    diameter: d,
                });
            }
        }
        Ok(())
    }

    /// Evaluates conjunct `i`; `env` must bind all of its variables.
    pub fn eval_conjunct(&self, i: usize, env: &dyn Fn(Var) -> i128) -> Result<bool, FilterError> {
        let c = &self.conjuncts[i];
        let (l, r) = (eval(&c.lhs, env)?, eval(&c.rhs, env)?);
        Ok(match c.cmp {
            Cmp::Lt => l < r,
            Cmp::Le => l <= r,
            Cmp::Gt => l > r,
            Cmp::Ge => l >= r,
            Cmp::Eq => l == r,
            Cmp::Ne => l != r,
        })
    }

    /// Evaluates the whole conjunction.
    pub fn eval(&self, env: &dyn Fn(Var) -> i128) -> Result<bool, FilterError> {
        for i in 0..self.len() {
            if !self.eval_conjunct(i, env)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl core::str::FromStr for Filter {
    type Err = FilterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Filter::parse(s)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn eval(e: &Expr, env: &dyn Fn(Var) -> i128) -> Result<i128, FilterError> {
    match e {
        Expr::Lit(x) => Ok(*x),
        Expr::Var(v) => Ok(env(*v)),
        Expr::Neg(x) => eval(x, env)?.checked_neg().ok_or(FilterError::Overflow),
        Expr::Bin(op, l, r) => {
            let (l, r) = (eval(l, env)?, eval(r, env)?);
            match op {
                Op::Add => l.checked_add(r),
                Op::Sub => l.checked_sub(r),
                Op::Mul => l.checked_mul(r),
            }
            .ok_or(FilterError::Overflow)
        }
    }
}

fn collect_vars(e: &Expr, out: &mut Vec<Var>) {
    match e {
        Expr::Lit(_) => {}
        Expr::Var(v) => {
            if !out.contains(v) {
                out.push(*v);
            }
        }
        Expr::Neg(x) => collect_vars(x, out),
        Expr::Bin(_, l, r) => {
            collect_vars(l, out);
            collect_vars(r, out);
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> FilterError {
        FilterError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.len();
        let boundary = self.src.get(end).is_none_or(|b| !b.is_ascii_alphanumeric());
        if self.src[self.pos..].starts_with(word.as_bytes()) && boundary {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn comparison(&mut self) -> Result<Comparison, FilterError> {
        let lhs = self.sum()?;
        self.skip_ws();
        let cmp = [
            ("<=", Cmp::Le),
            (">=", Cmp::Ge),
            ("==", Cmp::Eq),
            ("!=", Cmp::Ne),
            ("<", Cmp::Lt),
            (">", Cmp::Gt),
        ]
        .into_iter()
        .find(|(tok, _)| self.eat(tok))
        .map(|(_, c)| c)
        .ok_or_else(|| self.error("expected a comparison operator"))?;
        let rhs = self.sum()?;
        let mut vars = Vec::new();
        collect_vars(&lhs, &mut vars);
        collect_vars(&rhs, &mut vars);
        vars.sort_unstable();
        Ok(Comparison { lhs, cmp, rhs, vars })
    }

    fn sum(&mut self) -> Result<Expr, FilterError> {
        let mut acc = self.product()?;
        loop {
            let op = if self.eat("+") {
                Op::Add
            } else if self.eat("-") {
                Op::Sub
            } else {
                return Ok(acc);
            };
            acc = Expr::Bin(op, Box::new(acc), Box::new(self.product()?));
        }
    }

    fn product(&mut self) -> Result<Expr, FilterError> {
        let mut acc = self.unary()?;
        while self.eat("*") {
            acc = Expr::Bin(Op::Mul, Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, FilterError> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat("(") {
            let e = self.sum()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(e);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, FilterError> {
        self.skip_ws();
        let start = self.pos;
        let digits = |s: &[u8], from: usize| s[from..].iter().take_while(|b| b.is_ascii_digit()).count();
        match self.src.get(self.pos) {
            Some(b) if b.is_ascii_digit() => {
                let len = digits(self.src, self.pos);
                let text = core::str::from_utf8(&self.src[start..start + len]).expect("ascii digits");
                let value: i64 = text.parse().map_err(|_| self.error("integer literal too large"))?;
                self.pos += len;
                Ok(Expr::Lit(value.into()))
            }
            Some(&letter @ (b'k' | b'D' | b'a' | b'b' | b'c')) => {
                self.pos += 1;
                let len = digits(self.src, self.pos);
                let index = if len == 0 {
                    None
                } else {
                    let text = core::str::from_utf8(&self.src[self.pos..self.pos + len]).expect("ascii digits");
                    Some(text.parse::<usize>().map_err(|_| self.error("index too large"))?)
                };
                self.pos += len;
                if self
                    .src
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    self.pos = start;
                    return Err(self.error("unknown variable"));
                }
                let var = match (letter, index) {
                    (b'k', None) => Var::K,
                    (b'D', None) => Var::D,
                    (b'a', Some(i)) => Var::A(i),
                    (b'b', Some(i)) => Var::B(i),
                    (b'c', Some(i)) => Var::C(i),
                    _ => {
                        self.pos = start;
                        return Err(self.error("unknown variable"));
                    }
                };
                Ok(Expr::Var(var))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}
