//! Text formats for trees and groves.
//!
//! Trees: `.` for the leaf and `(left right)` for a graft; `L<k>`/`R<k>` name
//! the combs on input. Groves: `{t1, t2, ...}` in canonical order, a bare tree
//! for a single-tree grove, or `@n` for the total grove of degree `n`.

use std::fmt;

use thiserror::Error;

use crate::tree::{primitive, Side, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

/// Grove literal as written, before degree checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroveLiteral {
    Members(Vec<Tree>),
    Total(u32),
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn reset(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }

    pub(crate) fn number(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.error("expected a decimal number");
        }
        self.src[start..self.pos].parse().map_err(|_| ParseError {
            position: start,
            message: "number out of range".into(),
        })
    }

    fn comb(&mut self, side: Side) -> Result<Tree, ParseError> {
        let start = self.pos;
        let k = self.number()?;
        primitive(side, k).map_err(|_| ParseError {
            position: start,
            message: "primitive trees start at degree 1".into(),
        })
    }

    /// `.`, `L<k>`, `R<k>` or `(tree tree)`.
    pub(crate) fn tree(&mut self) -> Result<Tree, ParseError> {
        match self.peek() {
            Some('.') => {
                self.bump();
                Ok(Tree::leaf())
            }
            Some('L') => {
                self.bump();
                self.comb(Side::Left)
            }
            Some('R') => {
                self.bump();
                self.comb(Side::Right)
            }
            Some('(') => {
                self.bump();
                self.skip_ws();
                let left = self.tree()?;
                self.skip_ws();
                let right = self.tree()?;
                self.skip_ws();
                self.expect(')')?;
                Ok(Tree::graft(left, right))
            }
            Some(c) => self.error(format!("unexpected '{c}' where a tree was expected")),
            None => self.error("unexpected end of input, expected a tree"),
        }
    }

    /// `{tree, ...}`, `@n` or a single tree.
    pub(crate) fn grove(&mut self) -> Result<GroveLiteral, ParseError> {
        if self.eat('@') {
            return self.number().map(GroveLiteral::Total);
        }
        if !self.eat('{') {
            return self.tree().map(|t| GroveLiteral::Members(vec![t]));
        }
        let mut members = Vec::new();
        loop {
            self.skip_ws();
            members.push(self.tree()?);
            self.skip_ws();
            if self.eat('}') {
                return Ok(GroveLiteral::Members(members));
            }
            self.expect(',')?;
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            self.error("trailing input")
        }
    }
}

pub fn parse_tree(s: &str) -> Result<Tree, ParseError> {
    let mut cur = Cursor::new(s);
    cur.skip_ws();
    let t = cur.tree()?;
    cur.finish()?;
    Ok(t)
}

pub fn parse_grove_literal(s: &str) -> Result<GroveLiteral, ParseError> {
    let mut cur = Cursor::new(s);
    cur.skip_ws();
    let g = cur.grove()?;
    cur.finish()?;
    Ok(g)
}

impl fmt::Display for GroveLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroveLiteral::Total(n) => write!(f, "@{n}"),
            GroveLiteral::Members(ms) if ms.len() == 1 => write!(f, "{}", ms[0]),
            GroveLiteral::Members(ms) => {
                f.write_str("{")?;
                for (i, t) in ms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str("}")
            }
        }
    }
}
