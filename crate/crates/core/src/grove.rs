//! Groves: nonempty sets of trees of one degree.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::count::catalan;
use crate::text::{parse_grove_literal, GroveLiteral, ParseError};
use crate::tree::{enumerate_trees_with, Tree};
use crate::{Error, Limits, Result};

/// A nonempty set of distinct trees of equal degree, stored in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grove {
    degree: u32,
    members: Vec<Tree>,
}

/// Membership pattern of the parts of a grove's trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Inheritance {
    /// Every member is `T ∨ |`.
    Left,
    /// Every member is `| ∨ T`.
    Right,
    /// Only the degree-1 grove.
    Both,
    Neither,
}

/// Value of a left or right sum: a grove, or the zero the footnote
/// conventions `x ⊢ 0 = 0 ⊣ y = 0` produce.
///
/// `Empty` is absorbed by union and never escapes the public arithmetic
/// results.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SumTerm {
    Empty,
    Grove(Grove),
}

impl SumTerm {
    pub fn union(self, other: SumTerm) -> Result<SumTerm> {
        match (self, other) {
            (SumTerm::Empty, t) | (t, SumTerm::Empty) => Ok(t),
            (SumTerm::Grove(a), SumTerm::Grove(b)) => a.union(&b).map(SumTerm::Grove),
        }
    }

    pub fn as_grove(&self) -> Option<&Grove> {
        match self {
            SumTerm::Empty => None,
            SumTerm::Grove(g) => Some(g),
        }
    }

    pub fn into_grove(self) -> Option<Grove> {
        match self {
            SumTerm::Empty => None,
            SumTerm::Grove(g) => Some(g),
        }
    }
}

impl From<Grove> for SumTerm {
    fn from(g: Grove) -> Self {
        SumTerm::Grove(g)
    }
}

impl Grove {
    /// Deduplicated, canonically ordered grove; fails on empty or mixed-degree input.
    pub fn new(trees: impl IntoIterator<Item = Tree>) -> Result<Grove> {
        let mut members: Vec<Tree> = trees.into_iter().collect();
        let Some(first) = members.first() else {
            return Err(Error::domain("a grove needs at least one tree"));
        };
        let degree = first.degree();
        if let Some(bad) = members.iter().find(|t| t.degree() != degree) {
            return Err(Error::domain(format!(
                "mixed degrees {degree} and {} in one grove",
                bad.degree()
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Grove { degree, members })
    }

    pub fn from_tree(t: Tree) -> Grove {
        Grove {
            degree: t.degree(),
            members: vec![t],
        }
    }

    /// Caller guarantees nonempty, sorted, distinct members of degree `degree`.
    pub(crate) fn from_sorted(degree: u32, members: Vec<Tree>) -> Grove {
        debug_assert!(!members.is_empty());
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|t| t.degree() == degree));
        Grove { degree, members }
    }

    /// Caller guarantees nonempty members of degree `degree`.
    pub(crate) fn from_unsorted(degree: u32, mut members: Vec<Tree>) -> Grove {
        members.sort_unstable();
        members.dedup();
        Grove::from_sorted(degree, members)
    }

    /// The degree-0 grove `{|}`, neutral for addition.
    pub fn zero() -> Grove {
        Grove::from_tree(Tree::leaf())
    }

    /// The degree-1 grove `{(. .)}`, neutral for multiplication.
    pub fn unit() -> Grove {
        Grove::from_tree(Tree::unit())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `C(x)`, the number of member trees.
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Tree] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Tree> {
        self.members.iter()
    }

    pub fn contains(&self, t: &Tree) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn is_subset(&self, other: &Grove) -> bool {
        if self.degree != other.degree || self.count() > other.count() {
            return false;
        }
        let mut theirs = other.members.iter();
        'outer: for t in &self.members {
            for u in theirs.by_ref() {
                if u == t {
                    continue 'outer;
                }
                if u > t {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Grove) -> Result<Grove> {
        if self.degree != other.degree {
            return Err(Error::domain(format!(
                "union of groves of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let (mut a, mut b) = (
            self.members.iter().peekable(),
            other.members.iter().peekable(),
        );
        let mut out = Vec::with_capacity(self.count() + other.count());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    std::cmp::Ordering::Less => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Greater => out.push(b.next().unwrap().clone()),
                    std::cmp::Ordering::Equal => {
                        out.push(a.next().unwrap().clone());
                        b.next();
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        Ok(Grove::from_sorted(self.degree, out))
    }

    /// Member-wise reflection.
    pub fn reflect(&self) -> Grove {
        Grove::from_unsorted(
            self.degree,
            self.members.iter().map(Tree::reflect).collect(),
        )
    }

    pub fn classify_inheritance(&self) -> Result<Inheritance> {
        if self.degree == 0 {
            return Err(Error::domain("the degree-0 grove has no parts"));
        }
        let left = self.is_left_inherited();
        let right = self.is_right_inherited();
        Ok(match (left, right) {
            (true, true) => Inheritance::Both,
            (true, false) => Inheritance::Left,
            (false, true) => Inheritance::Right,
            (false, false) => Inheritance::Neither,
        })
    }

    /// Every member has an empty right part.
    pub fn is_left_inherited(&self) -> bool {
        self.members.iter().all(Tree::is_left_inherited)
    }

    /// Every member has an empty left part.
    pub fn is_right_inherited(&self) -> bool {
        self.members.iter().all(Tree::is_right_inherited)
    }

    /// Maximal count: the grove is `@degree`.
    pub fn is_total(&self) -> bool {
        self.degree <= 33 && self.count() as u64 == catalan::<u64>(self.degree)
    }

    /// Minimal count: the grove is a single tree.
    pub fn is_tree(&self) -> bool {
        self.count() == 1
    }

    pub fn as_tree(&self) -> Option<&Tree> {
        match self.members.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    #[cfg(test)]
    /// Members as a bit mask over the canonical enumeration of the degree.
    ///
    /// `universe` must be the full, sorted `Y_degree`.
    pub(crate) fn mask_in(&self, universe: &[Tree]) -> u64 {
        debug_assert!(universe.len() <= 64);
        self.members
            .iter()
            .map(|t| universe.binary_search(t).expect("member of Y_n"))
            .fold(0u64, |m, i| m | 1 << i)
    }

    /// Grove whose members are the set bits of `mask` over `universe` (sorted `Y_n`).
    pub(crate) fn from_mask(degree: u32, universe: &[Tree], mask: u64) -> Grove {
        let members = (0..universe.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| universe[i].clone())
            .collect();
        Grove::from_sorted(degree, members)
    }
}

/// `@n`: every tree of degree `n`.
pub fn total_grove(n: u32) -> Result<Grove> {
    total_grove_with(n, &Limits::default())
}

pub fn total_grove_with(n: u32, limits: &Limits) -> Result<Grove> {
    let trees = enumerate_trees_with(n, limits)?;
    if trees.len() > limits.max_count {
        return Err(Error::resource(format!(
            "@{n} has {} trees, above the count cap {}",
            trees.len(),
            limits.max_count
        )));
    }
    Ok(Grove::from_sorted(n, trees))
}

impl fmt::Display for Grove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.as_tree() {
            return write!(f, "{t}");
        }
        f.write_str("{")?;
        for (i, t) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Grove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroveParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl FromStr for Grove {
    type Err = GroveParseError;

    fn from_str(s: &str) -> std::result::Result<Grove, GroveParseError> {
        match parse_grove_literal(s)? {
            GroveLiteral::Total(n) => Ok(total_grove(n)?),
            GroveLiteral::Members(trees) => Ok(Grove::new(trees)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn g(s: &str) -> Grove {
        s.parse().unwrap()
    }

    #[test]
    fn construction() {
        let two = Grove::new([t("(. (. .))"), t("((. .) .)"), t("(. (. .))")]).unwrap();
        assert_eq!(two.degree(), 2);
        assert_eq!(two.count(), 2);
        assert_eq!(two.to_string(), "{((. .) .), (. (. .))}");
        assert_eq!(Grove::new([t(".")]).unwrap(), Grove::zero());
        assert!(matches!(
            Grove::new([t("(. .)"), t("((. .) .)")]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(Grove::new(Vec::new()), Err(Error::Domain(_))));
    }

    #[test]
    fn unions() {
        let l2 = g("L2");
        let r2 = g("R2");
        assert_eq!(l2.union(&r2).unwrap(), total_grove(2).unwrap());
        assert_eq!(l2.union(&l2).unwrap(), l2);
        assert!(l2.union(&g("L3")).is_err());
        let a = g("{L4, R4, ((. .) (. (. .)))}");
        let b = g("{R4, (R2 L1)}");
        let u = a.union(&b).unwrap();
        assert_eq!(u.count(), 4);
        assert!(a.is_subset(&u) && b.is_subset(&u));
        assert!(!u.is_subset(&a));
        assert!(SumTerm::Empty.union(SumTerm::Grove(l2.clone())).unwrap() == SumTerm::Grove(l2));
    }

    #[test]
    fn totals_and_counts() {
        assert_eq!(total_grove(0).unwrap(), Grove::zero());
        assert_eq!(
            total_grove(2).unwrap().to_string(),
            "{((. .) .), (. (. .))}"
        );
        for n in 0..=7 {
            let total = total_grove(n).unwrap();
            assert_eq!(total.degree(), n);
            assert_eq!(total.count() as u64, catalan::<u64>(n));
            assert!(total.is_total());
            assert_eq!(total.reflect(), total);
        }
        assert!(g("L5").is_tree());
        assert!(!g("L2").is_total());
        assert_eq!(g("L2").reflect(), g("R2"));
    }

    #[test]
    fn inheritance() {
        assert_eq!(g("L2").classify_inheritance().unwrap(), Inheritance::Left);
        assert_eq!(g("R3").classify_inheritance().unwrap(), Inheritance::Right);
        assert_eq!(
            g("(. .)").classify_inheritance().unwrap(),
            Inheritance::Both
        );
        assert_eq!(
            g("((. .) (. .))").classify_inheritance().unwrap(),
            Inheritance::Neither
        );
        assert_eq!(
            g("@2").classify_inheritance().unwrap(),
            Inheritance::Neither
        );
        assert!(Grove::zero().classify_inheritance().is_err());
    }

    #[test]
    fn grove_space_enumerates_exactly() {
        // distinct groves of degree n ↔ nonempty masks over Y_n
        for (n, expected) in [(0u32, 1usize), (1, 1), (2, 3), (3, 31)] {
            let universe = enumerate_trees_with(n, &Limits::default()).unwrap();
            let mut seen = std::collections::HashSet::new();
            for mask in 1u64..(1 << universe.len()) {
                let grove = Grove::from_mask(n, &universe, mask);
                assert_eq!(grove.mask_in(&universe), mask);
                assert!(grove.count() >= 1 && grove.count() <= universe.len());
                assert_eq!(grove.to_string().parse::<Grove>().unwrap(), grove);
                seen.insert(grove);
            }
            assert_eq!(seen.len(), expected);
        }
    }
}
