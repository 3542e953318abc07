//! Universal expressions: every tree of degree `n` is an iterated left/right
//! sum of `n` copies of the degree-1 tree, `w_x = w_{x^l} ⊢ a ⊣ w_{x^r}`.
//!
//! Words are kept in normal form under the rewrite rules
//!
//! ```text
//! (x ⊣ y) ⊣ z  →  x ⊣ (y + z)
//! (x ⊢ y) ⊣ z  →  x ⊢ (y ⊣ z)
//! (x + y) ⊢ z  →  x ⊢ (y ⊢ z)
//! ```
//!
//! so two words built from the same tree compare equal structurally.

use std::fmt;

use crate::arithmetic::{add_terms, left_sum_with, right_sum_with};
use crate::grove::{Grove, SumTerm};
use crate::tree::Tree;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    /// The single letter `a`, standing for the substituted grove.
    Letter,
    /// `u ⊣ v`
    Left(Box<Word>, Box<Word>),
    /// `u ⊢ v`
    Right(Box<Word>, Box<Word>),
    /// `u + v`
    Sum(Box<Word>, Box<Word>),
}

impl Word {
    pub fn left(u: Word, v: Word) -> Word {
        Word::Left(Box::new(u), Box::new(v))
    }

    pub fn right(u: Word, v: Word) -> Word {
        Word::Right(Box::new(u), Box::new(v))
    }

    pub fn sum(u: Word, v: Word) -> Word {
        Word::Sum(Box::new(u), Box::new(v))
    }

    pub fn letter_count(&self) -> usize {
        match self {
            Word::Letter => 1,
            Word::Left(u, v) | Word::Right(u, v) | Word::Sum(u, v) => {
                u.letter_count() + v.letter_count()
            }
        }
    }

    /// Applies the rewrite rules bottom-up until none matches.
    pub fn normalize(self) -> Word {
        let w = match self {
            Word::Letter => Word::Letter,
            Word::Left(u, v) => Word::left(u.normalize(), v.normalize()),
            Word::Right(u, v) => Word::right(u.normalize(), v.normalize()),
            Word::Sum(u, v) => Word::sum(u.normalize(), v.normalize()),
        };
        match w.rewrite_root() {
            Ok(next) => next.normalize(),
            Err(w) => w,
        }
    }

    fn rewrite_root(self) -> std::result::Result<Word, Word> {
        match self {
            Word::Left(u, z) => match *u {
                Word::Left(x, y) => Ok(Word::left(*x, Word::sum(*y, *z))),
                Word::Right(x, y) => Ok(Word::right(*x, Word::left(*y, *z))),
                u => Err(Word::Left(Box::new(u), z)),
            },
            Word::Right(u, z) => match *u {
                Word::Sum(x, y) => Ok(Word::right(*x, Word::right(*y, *z))),
                u => Err(Word::Right(Box::new(u), z)),
            },
            w => Err(w),
        }
    }

    pub fn is_normal(&self) -> bool {
        self.clone().normalize() == *self
    }

    fn is_compound(&self) -> bool {
        !matches!(self, Word::Letter)
    }
}

/// `w_x`, the normal-form universal expression of a nonzero tree.
pub fn universal_expression(t: &Tree) -> Result<Word> {
    fn raw(t: &Tree) -> Option<Word> {
        let (l, r) = t.parts()?;
        let mid = match raw(l) {
            Some(wl) => Word::right(wl, Word::Letter),
            None => Word::Letter,
        };
        Some(match raw(r) {
            Some(wr) => Word::left(mid, wr),
            None => mid,
        })
    }
    raw(t)
        .map(Word::normalize)
        .ok_or_else(|| Error::domain("the degree-0 tree has no universal expression"))
}

/// Substitutes `y` for every letter of `w` and evaluates the sums.
pub fn evaluate_word(w: &Word, y: &Grove) -> Result<Grove> {
    evaluate_word_with(w, y, &Limits::default())
}

pub fn evaluate_word_with(w: &Word, y: &Grove, limits: &Limits) -> Result<Grove> {
    let letter = SumTerm::Grove(y.clone());
    eval_term(w, &letter, limits)?
        .into_grove()
        .ok_or_else(|| Error::domain("word evaluated to the empty sum"))
}

fn eval_term(w: &Word, letter: &SumTerm, limits: &Limits) -> Result<SumTerm> {
    match w {
        Word::Letter => Ok(letter.clone()),
        Word::Left(u, v) => {
            let (u, v) = (eval_term(u, letter, limits)?, eval_term(v, letter, limits)?);
            left_sum_with(&u, &v, limits)
        }
        Word::Right(u, v) => {
            let (u, v) = (eval_term(u, letter, limits)?, eval_term(v, letter, limits)?);
            right_sum_with(&u, &v, limits)
        }
        Word::Sum(u, v) => {
            let (u, v) = (eval_term(u, letter, limits)?, eval_term(v, letter, limits)?);
            add_terms(&u, &v, limits)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, w: &Word, bare: bool) -> fmt::Result {
            if bare || !w.is_compound() {
                write!(f, "{w}")
            } else {
                write!(f, "({w})")
            }
        }
        match self {
            Word::Letter => f.write_str("a"),
            Word::Left(u, v) => {
                operand(f, u, false)?;
                f.write_str(" ⊣ ")?;
                operand(f, v, false)
            }
            // (x ⊢ y) ⊣ z = x ⊢ (y ⊣ z), so `x ⊢ y ⊣ z` reads the same either way.
            Word::Right(u, v) => {
                operand(f, u, false)?;
                f.write_str(" ⊢ ")?;
                operand(f, v, matches!(**v, Word::Left(..)))
            }
            Word::Sum(u, v) => {
                operand(f, u, false)?;
                f.write_str(" + ")?;
                operand(f, v, false)
            }
        }
    }
}
