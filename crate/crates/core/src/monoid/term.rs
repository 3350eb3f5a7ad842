//! Words and ω-terms over abstract variables.
//!
//! Grammar: a term is a sequence of factors; a factor is a letter or a
//! parenthesized term, optionally followed by `^k`, `^ω` (also `^w`, `^omega`)
//! or `^(ω+k)`. `ε` and `1` denote the empty product.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{Element, FiniteMonoid};
use crate::error::{Error, Result};
use crate::word::EPSILON;

/// Exponent of a factor: a fixed power, or `ω + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    Fixed(usize),
    Omega(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(char),
    Product(Vec<Term>),
    Power(Box<Term>, Exponent),
}

impl Term {
    pub fn empty() -> Self {
        Term::Product(Vec::new())
    }

    /// Variables in first-occurrence order.
    pub fn variables(&self) -> Vec<char> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.collect_vars(&mut seen, &mut out);
        out
    }

    fn collect_vars(&self, seen: &mut BTreeSet<char>, out: &mut Vec<char>) {
        match self {
            Term::Var(c) => {
                if seen.insert(*c) {
                    out.push(*c);
                }
            }
            Term::Product(ts) => ts.iter().for_each(|t| t.collect_vars(seen, out)),
            Term::Power(t, _) => t.collect_vars(seen, out),
        }
    }

    /// Evaluates with `assign` resolving each variable; ω is the monoid exponent.
    pub fn eval(
        &self,
        m: &FiniteMonoid,
        assign: &mut dyn FnMut(char) -> Result<Element>,
    ) -> Result<Element> {
        self.eval_with(m, m.exponent(), assign)
    }

    /// Like [`Term::eval`] with a precomputed exponent.
    pub fn eval_with(
        &self,
        m: &FiniteMonoid,
        omega: usize,
        assign: &mut dyn FnMut(char) -> Result<Element>,
    ) -> Result<Element> {
        match self {
            Term::Var(c) => assign(*c),
            Term::Product(ts) => {
                let mut acc = m.identity();
                for t in ts {
                    acc = m.mul(acc, t.eval_with(m, omega, assign)?);
                }
                Ok(acc)
            }
            Term::Power(t, e) => {
                let x = t.eval_with(m, omega, assign)?;
                Ok(match *e {
                    Exponent::Fixed(k) => m.pow(x, k),
                    Exponent::Omega(k) => m.pow(x, omega + k),
                })
            }
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Fixed(k) => write!(f, "{k}"),
            Exponent::Omega(0) => write!(f, "ω"),
            Exponent::Omega(k) => write!(f, "(ω+{k})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(c) => write!(f, "{c}"),
            Term::Product(ts) if ts.is_empty() => write!(f, "{EPSILON}"),
            Term::Product(ts) => ts.iter().try_for_each(|t| write!(f, "{t}")),
            Term::Power(t, e) => match **t {
                Term::Var(c) => write!(f, "{c}^{e}"),
                _ => write!(f, "({t})^{e}"),
            },
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Term(format!("{msg} at position {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn product(&mut self) -> Result<Term> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            let base = match c {
                ')' => break,
                '(' => {
                    self.pos += 1;
                    let inner = self.product()?;
                    if !self.eat(')') {
                        return Err(self.err("unbalanced parenthesis"));
                    }
                    inner
                }
                '1' | EPSILON => {
                    self.pos += 1;
                    Term::empty()
                }
                c if c.is_alphabetic() => {
                    self.pos += 1;
                    Term::Var(c)
                }
                c if c.is_whitespace() || c == '·' || c == '*' => {
                    self.pos += 1;
                    continue;
                }
                _ => return Err(self.err("unexpected character")),
            };
            let factor = if self.eat('^') {
                Term::Power(Box::new(base), self.exponent()?)
            } else {
                base
            };
            factors.push(factor);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Term::Product(factors)
        })
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .ok()
    }

    fn omega(&mut self) -> bool {
        for token in ["omega", "ω", "w"] {
            let t: Vec<char> = token.chars().collect();
            if self.chars[self.pos..].starts_with(&t) {
                self.pos += t.len();
                return true;
            }
        }
        false
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.omega() {
            return Ok(Exponent::Omega(0));
        }
        if let Some(k) = self.number() {
            return Ok(Exponent::Fixed(k));
        }
        if self.eat('(') {
            let e = if self.omega() {
                let k = if self.eat('+') {
                    self.number().ok_or_else(|| self.err("expected offset"))?
                } else {
                    0
                };
                Exponent::Omega(k)
            } else {
                Exponent::Fixed(self.number().ok_or_else(|| self.err("expected exponent"))?)
            };
            if !self.eat(')') {
                return Err(self.err("unbalanced exponent"));
            }
            return Ok(e);
        }
        Err(self.err("expected exponent"))
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: s.chars().collect(),
            pos: 0,
            src: s,
        };
        let t = p.product()?;
        if p.pos != p.chars.len() {
            return Err(p.err("unbalanced parenthesis"));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteMonoid {
        FiniteMonoid::cyclic_group(n)
    }

    fn eval(m: &FiniteMonoid, s: &str) -> Element {
        let t: Term = s.parse().unwrap();
        t.eval(m, &mut |c| m.generator(c)).unwrap()
    }

    #[test]
    fn parses_and_prints() {
        for (src, shown) in [
            ("ab", "ab"),
            ("(ab)^ω", "(ab)^ω"),
            ("x^w y x^omega", "x^ωyx^ω"),
            ("a^(ω+1)", "a^(ω+1)"),
            ("(ab)^3", "(ab)^3"),
            ("ε", "ε"),
            ("", "ε"),
        ] {
            assert_eq!(src.parse::<Term>().unwrap().to_string(), shown, "{src}");
        }
    }

    #[test]
    fn rejects_bad_syntax() {
        for bad in ["(ab", "ab)", "a^", "a^(ω+)", "a#b"] {
            assert!(bad.parse::<Term>().is_err(), "{bad}");
        }
    }

    #[test]
    fn variables_in_order() {
        let t: Term = "(yx)^ω z y".parse().unwrap();
        assert_eq!(t.variables(), vec!['y', 'x', 'z']);
    }

    #[test]
    fn evaluates_powers_in_cyclic_group() {
        let m = z(3);
        let g = m.generator('g').unwrap();
        assert_eq!(eval(&m, "g^ω"), m.identity());
        assert_eq!(eval(&m, "g^(ω+1)"), g);
        assert_eq!(eval(&m, "ggg"), m.identity());
        assert_eq!(eval(&m, "(gg)^2"), g);
        assert_eq!(eval(&m, "ε"), m.identity());
    }

    #[test]
    fn unknown_generator_is_an_error() {
        let m = z(2);
        let t: Term = "q".parse().unwrap();
        assert!(t.eval(&m, &mut |c| m.generator(c)).is_err());
    }
}
