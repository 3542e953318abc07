//! Left and right sums, addition and multiplication of groves.
//!
//! For nonzero trees `x = x^l ∨ x^r` and `y = y^l ∨ y^r`:
//!
//! ```text
//! x ⊣ y = x^l ∨ (x^r + y)        x ⊢ y = (x + y^l) ∨ y^r
//! x + y = (x ⊣ y) ∪ (x ⊢ y)
//! ```
//!
//! Zero cases: `x ⊢ | = 0` and `| ⊣ y = 0` (the [`SumTerm::Empty`] value),
//! `x ⊣ | = x` and `| ⊢ y = y`, and `| ⊣ | = | ⊢ | = |`. This is the only
//! assignment under which `|` is a two-sided neutral element for `+`.
//! Everything distributes over unions in both arguments.

use crate::grove::{Grove, SumTerm};
use crate::tree::Tree;
use crate::word::{evaluate_word_with, universal_expression};
use crate::{Error, Limits, Result};

/// `x + y` for two trees, in canonical order.
///
/// The right-sum trees all have a left part of degree `≥ deg x` and the
/// left-sum trees one of degree `< deg x`; emitting the right sum first keeps
/// the output sorted.
#[cfg(test)]
fn sum_trees(x: &Tree, y: &Tree) -> Vec<Tree> {
    let mut out = Vec::new();
    push_sum(x, y, &mut |t| out.push(t));
    out
}

fn push_sum(x: &Tree, y: &Tree, emit: &mut dyn FnMut(Tree)) {
    match (x.parts(), y.parts()) {
        (None, _) => emit(y.clone()),
        (_, None) => emit(x.clone()),
        (Some((xl, xr)), Some((yl, yr))) => {
            push_sum(x, yl, &mut |z| emit(Tree::graft(z, yr.clone())));
            push_sum(xr, y, &mut |z| emit(Tree::graft(xl.clone(), z)));
        }
    }
}

fn left_sum_trees(x: &Tree, y: &Tree, emit: &mut dyn FnMut(Tree)) {
    let (xl, xr) = x.parts().expect("nonzero left operand");
    push_sum(xr, y, &mut |z| emit(Tree::graft(xl.clone(), z)));
}

fn right_sum_trees(x: &Tree, y: &Tree, emit: &mut dyn FnMut(Tree)) {
    let (yl, yr) = y.parts().expect("nonzero right operand");
    push_sum(x, yl, &mut |z| emit(Tree::graft(z, yr.clone())));
}

fn check_degree(degree: u32, limits: &Limits) -> Result<()> {
    if degree > limits.max_degree {
        return Err(Error::resource(format!(
            "result degree {degree} exceeds the degree cap {}",
            limits.max_degree
        )));
    }
    Ok(())
}

fn check_count(len: usize, limits: &Limits) -> Result<()> {
    if len > limits.max_count {
        return Err(Error::resource(format!(
            "grove of {len} trees exceeds the count cap {}",
            limits.max_count
        )));
    }
    Ok(())
}

type TreeOp = fn(&Tree, &Tree, &mut dyn FnMut(Tree));

fn distribute(a: &Grove, b: &Grove, op: TreeOp, limits: &Limits) -> Result<Grove> {
    let degree = a.degree() + b.degree();
    check_degree(degree, limits)?;
    let mut out = Vec::new();
    let mut overflow = false;
    for x in a.iter() {
        for y in b.iter() {
            op(x, y, &mut |t| out.push(t));
        }
        if out.len() > limits.max_count {
            out.sort_unstable();
            out.dedup();
            if out.len() > limits.max_count {
                overflow = true;
                break;
            }
        }
    }
    if overflow {
        check_count(out.len(), limits)?;
    }
    let grove = Grove::from_unsorted(degree, out);
    check_count(grove.count(), limits)?;
    Ok(grove)
}

/// `a ⊣ b`, without resource caps.
pub fn left_sum(a: &SumTerm, b: &SumTerm) -> SumTerm {
    left_sum_with(a, b, &unbounded()).expect("no caps without limits")
}

/// `a ⊢ b`, without resource caps.
pub fn right_sum(a: &SumTerm, b: &SumTerm) -> SumTerm {
    right_sum_with(a, b, &unbounded()).expect("no caps without limits")
}

fn unbounded() -> Limits {
    Limits {
        max_degree: u32::MAX,
        max_count: usize::MAX,
        ..Limits::default()
    }
}

pub fn left_sum_with(a: &SumTerm, b: &SumTerm, limits: &Limits) -> Result<SumTerm> {
    let (SumTerm::Grove(x), SumTerm::Grove(y)) = (a, b) else {
        return Ok(SumTerm::Empty);
    };
    Ok(match (x.degree(), y.degree()) {
        (0, 0) => SumTerm::Grove(Grove::zero()),
        (0, _) => SumTerm::Empty,
        (_, 0) => SumTerm::Grove(x.clone()),
        _ => SumTerm::Grove(distribute(x, y, left_sum_trees, limits)?),
    })
}

pub fn right_sum_with(a: &SumTerm, b: &SumTerm, limits: &Limits) -> Result<SumTerm> {
    let (SumTerm::Grove(x), SumTerm::Grove(y)) = (a, b) else {
        return Ok(SumTerm::Empty);
    };
    Ok(match (x.degree(), y.degree()) {
        (0, 0) => SumTerm::Grove(Grove::zero()),
        (_, 0) => SumTerm::Empty,
        (0, _) => SumTerm::Grove(y.clone()),
        _ => SumTerm::Grove(distribute(x, y, right_sum_trees, limits)?),
    })
}

/// `(a ⊣ b) ∪ (a ⊢ b)` on sum terms; `Empty` on either side gives `Empty`.
pub(crate) fn add_terms(a: &SumTerm, b: &SumTerm, limits: &Limits) -> Result<SumTerm> {
    left_sum_with(a, b, limits)?.union(right_sum_with(a, b, limits)?)
}

/// `a + b` under the default limits.
pub fn add(a: &Grove, b: &Grove) -> Result<Grove> {
    add_with(a, b, &Limits::default())
}

pub fn add_with(a: &Grove, b: &Grove, limits: &Limits) -> Result<Grove> {
    match (a.degree(), b.degree()) {
        (0, _) => Ok(b.clone()),
        (_, 0) => Ok(a.clone()),
        _ => distribute(a, b, |x, y, emit| push_sum(x, y, emit), limits),
    }
}

/// `a × b` under the default limits.
pub fn multiply(a: &Grove, b: &Grove) -> Result<Grove> {
    multiply_with(a, b, &Limits::default())
}

/// `a × b = ⋃_{x ∈ a} w_x(b)`.
///
/// A degree-0 factor on either side gives the degree-0 grove.
pub fn multiply_with(a: &Grove, b: &Grove, limits: &Limits) -> Result<Grove> {
    if a.degree() == 0 || b.degree() == 0 {
        return Ok(Grove::zero());
    }
    check_degree(a.degree() * b.degree(), limits)?;
    let mut acc: Option<Grove> = None;
    for x in a.iter() {
        let word = universal_expression(x)?;
        let part = evaluate_word_with(&word, b, limits)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => prev.union(&part)?,
        });
        check_count(acc.as_ref().map_or(0, Grove::count), limits)?;
    }
    Ok(acc.expect("groves are nonempty"))
}
