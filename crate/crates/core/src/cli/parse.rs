//! Expressions over grove literals.
//!
//! ```text
//! expr := term ('+' term)*
//! term := atom ('*' atom)*
//! atom := tree | '{' tree (',' tree)* '}' | '@' digits | '(' expr ')'
//! ```
//!
//! A `(` starts a tree literal when a full `(child child)` parses from it, and
//! a grouping otherwise.

use std::fmt;

use crate::arithmetic::{add_with, multiply_with};
use crate::grove::{total_grove_with, Grove};
use crate::text::{Cursor, GroveLiteral, ParseError};
use crate::{Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    Literal(GroveLiteral),
    Add(Box<Expression>, Box<Expression>),
    Multiply(Box<Expression>, Box<Expression>),
}

impl Expression {
    pub fn evaluate(&self, limits: &Limits) -> Result<Grove> {
        match self {
            Expression::Literal(GroveLiteral::Total(n)) => total_grove_with(*n, limits),
            Expression::Literal(GroveLiteral::Members(ts)) => Grove::new(ts.iter().cloned()),
            Expression::Add(a, b) => add_with(&a.evaluate(limits)?, &b.evaluate(limits)?, limits),
            Expression::Multiply(a, b) => {
                multiply_with(&a.evaluate(limits)?, &b.evaluate(limits)?, limits)
            }
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Literal(g) => write!(f, "{g}"),
            Expression::Add(a, b) => write!(f, "{a} + {b}"),
            Expression::Multiply(a, b) => {
                let side = |f: &mut fmt::Formatter<'_>, e: &Expression| match e {
                    Expression::Add(..) => write!(f, "({e})"),
                    _ => write!(f, "{e}"),
                };
                side(f, a)?;
                f.write_str(" * ")?;
                side(f, b)
            }
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expression, ParseError> {
    let mut cur = Cursor::new(text);
    let e = expr(&mut cur)?;
    cur.finish()?;
    Ok(e)
}

fn expr(cur: &mut Cursor<'_>) -> Result<Expression, ParseError> {
    let mut acc = term(cur)?;
    loop {
        cur.skip_ws();
        if !cur.eat('+') {
            return Ok(acc);
        }
        acc = Expression::Add(Box::new(acc), Box::new(term(cur)?));
    }
}

fn term(cur: &mut Cursor<'_>) -> Result<Expression, ParseError> {
    let mut acc = atom(cur)?;
    loop {
        cur.skip_ws();
        if !(cur.eat('*') || cur.eat('×')) {
            return Ok(acc);
        }
        acc = Expression::Multiply(Box::new(acc), Box::new(atom(cur)?));
    }
}

fn atom(cur: &mut Cursor<'_>) -> Result<Expression, ParseError> {
    cur.skip_ws();
    match cur.peek() {
        Some('(') => {
            let start = cur.pos();
            if let Ok(t) = cur.tree() {
                return Ok(Expression::Literal(GroveLiteral::Members(vec![t])));
            }
            cur.reset(start);
            cur.bump();
            let inner = expr(cur)?;
            cur.skip_ws();
            cur.expect(')')?;
            Ok(inner)
        }
        Some('.' | 'L' | 'R' | '{' | '@') => cur.grove().map(Expression::Literal),
        Some(c) => cur.error(format!("unknown token '{c}'")),
        None => cur.error("unexpected end of input"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;

    fn lit(s: &str) -> Expression {
        Expression::Literal(GroveLiteral::Members(vec![s.parse::<Tree>().unwrap()]))
    }

    #[test]
    fn grammar() {
        assert_eq!(
            parse_expression("L2 * R2").unwrap(),
            Expression::Multiply(Box::new(lit("L2")), Box::new(lit("R2")))
        );
        assert_eq!(
            parse_expression("@2 + @3").unwrap(),
            Expression::Add(
                Box::new(Expression::Literal(GroveLiteral::Total(2))),
                Box::new(Expression::Literal(GroveLiteral::Total(3)))
            )
        );
        assert_eq!(parse_expression("((. .) .)").unwrap(), lit("L2"));
        assert_eq!(parse_expression("(L2 R2)").unwrap(), lit("(L2 R2)"));
        assert_eq!(parse_expression("(L2)").unwrap(), lit("L2"));
        let e = parse_expression("L1 + L1 * (L1 + L1)").unwrap();
        assert_eq!(e.to_string(), "(. .) + (. .) * ((. .) + (. .))");
        let e = parse_expression("(L1 + L1) * L2 + R2").unwrap();
        assert_eq!(e.to_string(), "((. .) + (. .)) * ((. .) .) + (. (. .))");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_expression("L2 + ").unwrap_err().position, 5);
        assert_eq!(parse_expression("L2 # R2").unwrap_err().position, 3);
        assert_eq!(parse_expression("(L2 + R2").unwrap_err().position, 8);
        assert!(parse_expression("x")
            .unwrap_err()
            .message
            .contains("unknown token"));
    }

    #[test]
    fn evaluation() {
        let limits = Limits::default();
        let g = parse_expression("L2 * R2")
            .unwrap()
            .evaluate(&limits)
            .unwrap();
        assert_eq!(g.to_string(), "((. (. .)) (. .))");
        let g = parse_expression("@1 + @1")
            .unwrap()
            .evaluate(&limits)
            .unwrap();
        assert_eq!(g.to_string(), "{((. .) .), (. (. .))}");
        assert!(parse_expression("{L2, L3}")
            .unwrap()
            .evaluate(&limits)
            .is_err());
    }
}
