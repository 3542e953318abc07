//! Planar binary trees, their canonical enumeration and the Tamari order.
//!
//! A tree is either a leaf (degree 0) or the graft `l ∨ r` of two trees. The
//! canonical order on `Y_n` lists, for each left degree `i = n-1` down to `0`,
//! the grafts `Y_i × Y_{n-1-i}` by left index then right index. The left comb
//! `L_n` comes first and the right comb `R_n` last. [`Tree`]'s `Ord` follows
//! that order (degree first), so sorted vectors of trees are canonical.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::count::catalan_table;
use crate::{Error, Limits, Result, TreeIndex};

#[derive(Clone)]
pub struct Tree(Option<Arc<Node>>);

struct Node {
    left: Tree,
    right: Tree,
    degree: u32,
}

/// Which comb or which part of a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl Tree {
    /// The degree-0 tree `|`.
    pub fn leaf() -> Tree {
        Tree(None)
    }

    /// `l ∨ r`: a new root with `l` on its left leaf and `r` on its right leaf.
    pub fn graft(left: Tree, right: Tree) -> Tree {
        let degree = left.degree() + right.degree() + 1;
        Tree(Some(Arc::new(Node {
            left,
            right,
            degree,
        })))
    }

    /// The degree-1 tree `(. .)`.
    pub fn unit() -> Tree {
        Tree::graft(Tree::leaf(), Tree::leaf())
    }

    pub fn is_leaf(&self) -> bool {
        self.0.is_none()
    }

    /// Number of internal vertices.
    pub fn degree(&self) -> u32 {
        self.0.as_ref().map_or(0, |n| n.degree)
    }

    pub fn leaf_count(&self) -> u32 {
        self.degree() + 1
    }

    /// Left and right parts, or `None` for the leaf.
    pub fn parts(&self) -> Option<(&Tree, &Tree)> {
        self.0.as_deref().map(|n| (&n.left, &n.right))
    }

    /// Inverse of [`Tree::graft`].
    pub fn split(&self) -> Result<(Tree, Tree)> {
        self.parts()
            .map(|(l, r)| (l.clone(), r.clone()))
            .ok_or_else(|| Error::domain("leaf has no parts"))
    }

    /// `x^l`; the leaf is its own (empty) left part.
    pub fn left(&self) -> Tree {
        self.parts().map_or_else(Tree::leaf, |(l, _)| l.clone())
    }

    /// `x^r`; the leaf is its own (empty) right part.
    pub fn right(&self) -> Tree {
        self.parts().map_or_else(Tree::leaf, |(_, r)| r.clone())
    }

    /// `x^r = |`, i.e. `x = T ∨ |`.
    pub fn is_left_inherited(&self) -> bool {
        matches!(self.parts(), Some((_, r)) if r.is_leaf())
    }

    /// `x^l = |`, i.e. `x = | ∨ T`.
    pub fn is_right_inherited(&self) -> bool {
        matches!(self.parts(), Some((l, _)) if l.is_leaf())
    }

    /// Mirror image through the vertical axis at the root.
    pub fn reflect(&self) -> Tree {
        match self.parts() {
            None => Tree::leaf(),
            Some((l, r)) => Tree::graft(r.reflect(), l.reflect()),
        }
    }

    /// `Some(k)` if this tree is the comb `L_k` (`k ≥ 1`).
    pub fn as_left_comb(&self) -> Option<u32> {
        self.comb_length(Side::Left)
    }

    /// `Some(k)` if this tree is the comb `R_k` (`k ≥ 1`).
    pub fn as_right_comb(&self) -> Option<u32> {
        self.comb_length(Side::Right)
    }

    fn comb_length(&self, side: Side) -> Option<u32> {
        let mut k = 0;
        let mut cur = self;
        while let Some((l, r)) = cur.parts() {
            let (spine, off) = match side {
                Side::Left => (l, r),
                Side::Right => (r, l),
            };
            if !off.is_leaf() {
                return None;
            }
            k += 1;
            cur = spine;
        }
        (k > 0).then_some(k)
    }

    /// Canonical position of this tree within `Y_degree`.
    pub fn rank(&self) -> TreeRank {
        let n = self.degree();
        let table = catalan_table(n);
        TreeRank {
            degree: n,
            index: rank_in(self, &table),
        }
    }

    /// Inverse of [`Tree::rank`].
    pub fn unrank(rank: TreeRank) -> Result<Tree> {
        let table = catalan_table(rank.degree);
        if rank.index >= table[rank.degree as usize] {
            return Err(Error::domain(format!(
                "index {} out of range for degree {}",
                rank.index, rank.degree
            )));
        }
        Ok(unrank_in(rank.degree, rank.index, &table))
    }

    /// Trees reachable by one rotation `(a∨b)∨c → a∨(b∨c)` at some vertex.
    pub fn covers(&self) -> BTreeSet<Tree> {
        let mut out = BTreeSet::new();
        self.push_rotations(Side::Left, &mut out);
        out
    }

    /// Trees from which one rotation reaches this tree.
    pub fn covered_by(&self) -> BTreeSet<Tree> {
        let mut out = BTreeSet::new();
        self.push_rotations(Side::Right, &mut out);
        out
    }

    // Side::Left rotates upward in the Tamari order, Side::Right downward.
    fn push_rotations(&self, dir: Side, out: &mut BTreeSet<Tree>) {
        let Some((l, r)) = self.parts() else { return };
        match dir {
            Side::Left => {
                if let Some((a, b)) = l.parts() {
                    out.insert(Tree::graft(a.clone(), Tree::graft(b.clone(), r.clone())));
                }
            }
            Side::Right => {
                if let Some((b, c)) = r.parts() {
                    out.insert(Tree::graft(Tree::graft(l.clone(), b.clone()), c.clone()));
                }
            }
        }
        let mut sub = BTreeSet::new();
        l.push_rotations(dir, &mut sub);
        out.extend(sub.into_iter().map(|t| Tree::graft(t, r.clone())));
        let mut sub = BTreeSet::new();
        r.push_rotations(dir, &mut sub);
        out.extend(sub.into_iter().map(|t| Tree::graft(l.clone(), t)));
    }

    /// Text form with `L<k>`/`R<k>` substituted where the tree is a comb.
    pub fn shorthand(&self) -> String {
        if let Some(k) = self.as_left_comb() {
            format!("L{k}")
        } else if let Some(k) = self.as_right_comb() {
            format!("R{k}")
        } else {
            match self.parts() {
                None => ".".to_string(),
                Some((l, r)) => format!("({} {})", l.shorthand(), r.shorthand()),
            }
        }
    }
}

fn rank_in(t: &Tree, table: &[u64]) -> TreeIndex {
    match t.parts() {
        None => 0,
        Some((l, r)) => {
            let n = t.degree() as usize;
            let i = l.degree() as usize;
            let offset: u64 = (i + 1..n).map(|j| table[j] * table[n - 1 - j]).sum();
            offset + rank_in(l, table) * table[n - 1 - i] + rank_in(r, table)
        }
    }
}

fn unrank_in(n: u32, mut index: TreeIndex, table: &[u64]) -> Tree {
    if n == 0 {
        return Tree::leaf();
    }
    let n = n as usize;
    for i in (0..n).rev() {
        let block = table[i] * table[n - 1 - i];
        if index < block {
            let right_count = table[n - 1 - i];
            let l = unrank_in(i as u32, index / right_count, table);
            let r = unrank_in((n - 1 - i) as u32, index % right_count, table);
            return Tree::graft(l, r);
        }
        index -= block;
    }
    unreachable!("index checked against c_n by the caller")
}

/// `(degree, index)` coordinates of a tree in the canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeRank {
    pub degree: u32,
    pub index: TreeIndex,
}

/// All trees of degree `n` in canonical order, under the default degree cap.
pub fn enumerate_trees(n: u32) -> Result<Vec<Tree>> {
    enumerate_trees_with(n, &Limits::default())
}

pub fn enumerate_trees_with(n: u32, limits: &Limits) -> Result<Vec<Tree>> {
    if n > limits.max_degree {
        return Err(Error::resource(format!(
            "enumerating Y_{n} exceeds the degree cap {}",
            limits.max_degree
        )));
    }
    Ok(enumerate_levels(n).pop().expect("levels are nonempty"))
}

/// `Y_0, ..., Y_n`, sharing subtrees between levels.
pub(crate) fn enumerate_levels(n: u32) -> Vec<Vec<Tree>> {
    let mut levels: Vec<Vec<Tree>> = vec![vec![Tree::leaf()]];
    for m in 1..=n as usize {
        let mut level = Vec::new();
        for i in (0..m).rev() {
            for l in &levels[i] {
                for r in &levels[m - 1 - i] {
                    level.push(Tree::graft(l.clone(), r.clone()));
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// The comb `L_n = L_{n-1} ∨ |` or `R_n = | ∨ R_{n-1}`, with `L_1 = R_1 = (. .)`.
pub fn primitive(side: Side, n: u32) -> Result<Tree> {
    if n == 0 {
        return Err(Error::domain("primitive trees start at degree 1"));
    }
    let mut t = Tree::leaf();
    for _ in 0..n {
        t = match side {
            Side::Left => Tree::graft(t, Tree::leaf()),
            Side::Right => Tree::graft(Tree::leaf(), t),
        };
    }
    Ok(t)
}

/// Identify the root of `x` with the leftmost leaf of `y` (`x / y`).
pub fn over(x: &Tree, y: &Tree) -> Tree {
    match y.parts() {
        None => x.clone(),
        Some((l, r)) => Tree::graft(over(x, l), r.clone()),
    }
}

/// Identify the rightmost leaf of `x` with the root of `y` (`x \ y`).
pub fn under(x: &Tree, y: &Tree) -> Tree {
    match x.parts() {
        None => y.clone(),
        Some((l, r)) => Tree::graft(l.clone(), under(r, y)),
    }
}

fn check_same_degree(x: &Tree, y: &Tree) -> Result<()> {
    if x.degree() != y.degree() {
        return Err(Error::domain(format!(
            "Tamari order compares trees of one degree, got {} and {}",
            x.degree(),
            y.degree()
        )));
    }
    Ok(())
}

fn reachable(start: &Tree, dir: Side, stop: Option<&Tree>) -> (HashSet<Tree>, bool) {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(t) = queue.pop_front() {
        if stop == Some(&t) {
            return (seen, true);
        }
        let next = match dir {
            Side::Left => t.covers(),
            Side::Right => t.covered_by(),
        };
        for s in next {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    (seen, false)
}

/// `x ≤ y` in the Tamari order: `y` is reachable from `x` by rotations.
pub fn tamari_leq(x: &Tree, y: &Tree) -> Result<bool> {
    check_same_degree(x, y)?;
    Ok(reachable(x, Side::Left, Some(y)).1)
}

/// `{ z : lo ≤ z ≤ hi }`, empty when `lo ≰ hi`.
pub fn tamari_interval(lo: &Tree, hi: &Tree) -> Result<BTreeSet<Tree>> {
    check_same_degree(lo, hi)?;
    let (up, _) = reachable(lo, Side::Left, None);
    let (down, _) = reachable(hi, Side::Right, None);
    Ok(up.intersection(&down).cloned().collect())
}

impl PartialEq for Tree {
    fn eq(&self, other: &Tree) -> bool {
        match (&self.0, &other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.degree == b.degree && a.left == b.left && a.right == b.right)
            }
            _ => false,
        }
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.parts() {
            None => state.write_u8(0),
            Some((l, r)) => {
                state.write_u8(1);
                l.hash(state);
                r.hash(state);
            }
        }
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Tree) -> Ordering {
        match (&self.0, &other.0) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) {
                    return Ordering::Equal;
                }
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| b.left.degree().cmp(&a.left.degree()))
                    .then_with(|| a.left.cmp(&b.left))
                    .then_with(|| a.right.cmp(&b.right))
            }
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Tree) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            None => f.write_str("."),
            Some((l, r)) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = crate::text::ParseError;

    fn from_str(s: &str) -> std::result::Result<Tree, Self::Err> {
        crate::text::parse_tree(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn l(n: u32) -> Tree {
        primitive(Side::Left, n).unwrap()
    }

    fn r(n: u32) -> Tree {
        primitive(Side::Right, n).unwrap()
    }

    #[test]
    fn graft_and_split() {
        assert_eq!(Tree::graft(t("(. .)"), t(".")), t("((. .) .)"));
        assert_eq!(Tree::graft(t("(. .)"), t("(. .)")), t("((. .) (. .))"));
        assert_eq!(Tree::graft(Tree::leaf(), Tree::leaf()), t("(. .)"));
        assert_eq!(t("((. .) .)").split().unwrap(), (t("(. .)"), t(".")));
        assert_eq!(
            t("((. .) (. .))").split().unwrap(),
            (t("(. .)"), t("(. .)"))
        );
        assert_eq!(
            Tree::leaf().split(),
            Err(Error::Domain("leaf has no parts".into()))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(t(".").degree(), 0);
        let fig = t("((. (. .)) (. .))");
        assert_eq!(fig.degree(), 4);
        assert_eq!(fig.leaf_count(), 5);
    }

    #[test]
    fn over_and_under() {
        assert_eq!(over(&t("(. (. .))"), &t("(. .)")), t("((. (. .)) .)"));
        assert_eq!(over(&l(3), &Tree::leaf()), l(3));
        assert_eq!(over(&Tree::leaf(), &l(3)), l(3));
        assert_eq!(over(&t("(. .)"), &t("((. .) .)")), t("(((. .) .) .)"));
        assert_eq!(under(&t("((. .) .)"), &t("(. .)")), t("((. .) (. .))"));
        assert_eq!(under(&r(2), &Tree::leaf()), r(2));
        assert_eq!(under(&t("(. .)"), &t("((. .) .)")), t("(. ((. .) .))"));
    }

    #[test]
    fn reflection() {
        assert_eq!(t("((. .) .)").reflect(), t("(. (. .))"));
        assert_eq!(t("((. .) (. .))").reflect(), t("((. .) (. .))"));
        for n in 1..=10 {
            assert_eq!(l(n).reflect(), r(n));
        }
    }

    #[test]
    fn primitives() {
        assert_eq!(l(1), t("(. .)"));
        assert_eq!(r(1), t("(. .)"));
        assert_eq!(l(3), t("(((. .) .) .)"));
        assert_eq!(r(3), t("(. (. (. .)))"));
        assert!(primitive(Side::Left, 0).is_err());
        assert_eq!(l(4).as_left_comb(), Some(4));
        assert_eq!(l(4).as_right_comb(), None);
        assert_eq!(Tree::unit().as_right_comb(), Some(1));
        assert_eq!(Tree::leaf().as_left_comb(), None);
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(enumerate_trees(0).unwrap(), vec![Tree::leaf()]);
        assert_eq!(enumerate_trees(3).unwrap().len(), 5);
        assert_eq!(enumerate_trees(7).unwrap().len(), 429);
        assert!(matches!(enumerate_trees(13), Err(Error::Resource(_))));
        let y3: Vec<String> = enumerate_trees(3)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(
            y3,
            [
                "(((. .) .) .)",
                "((. (. .)) .)",
                "((. .) (. .))",
                "(. ((. .) .))",
                "(. (. (. .)))"
            ]
        );
    }

    #[test]
    fn rank_unrank_bijection() {
        for n in 0..=10 {
            let trees = enumerate_trees(n).unwrap();
            let mut sorted = trees.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, trees, "enumeration is sorted and distinct");
            for (i, tree) in trees.iter().enumerate() {
                assert_eq!(tree.degree(), n);
                let rank = tree.rank();
                assert_eq!(
                    rank,
                    TreeRank {
                        degree: n,
                        index: i as u64
                    }
                );
                assert_eq!(&Tree::unrank(rank).unwrap(), tree);
            }
            assert!(Tree::unrank(TreeRank {
                degree: n,
                index: trees.len() as u64
            })
            .is_err());
        }
    }

    #[test]
    fn rotations() {
        assert_eq!(
            t("((. .) .)").covers().into_iter().collect::<Vec<_>>(),
            vec![t("(. (. .))")]
        );
        assert!(r(3).covers().is_empty());
        assert!(Tree::leaf().covers().is_empty());
        let expected: BTreeSet<Tree> = [t("((. .) (. .))"), t("((. (. .)) .)")].into();
        assert_eq!(l(3).covers(), expected);
        for tree in enumerate_trees(6).unwrap() {
            fn sites(t: &Tree) -> usize {
                match t.parts() {
                    None => 0,
                    Some((l, r)) => usize::from(!l.is_leaf()) + sites(l) + sites(r),
                }
            }
            assert_eq!(tree.covers().len(), sites(&tree));
            for up in tree.covers() {
                assert!(up.covered_by().contains(&tree));
            }
        }
    }

    #[test]
    fn tamari_examples() {
        assert!(tamari_leq(&l(3), &r(3)).unwrap());
        let chain = [l(3), t("((. (. .)) .)"), t("(. ((. .) .))"), r(3)];
        for w in chain.windows(2) {
            assert!(tamari_leq(&w[0], &w[1]).unwrap());
        }
        assert!(tamari_leq(&r(3), &r(3)).unwrap());
        let a = t("((. .) (. .))");
        let b = t("((. (. .)) .)");
        assert!(!tamari_leq(&a, &b).unwrap());
        assert!(!tamari_leq(&b, &a).unwrap());
        assert!(tamari_leq(&l(2), &l(3)).is_err());
    }

    #[test]
    fn intervals() {
        let x = Tree::unit();
        assert_eq!(tamari_interval(&l(3), &l(3)).unwrap(), [l(3)].into());
        assert_eq!(
            tamari_interval(&over(&x, &x), &under(&x, &x)).unwrap(),
            [l(2), r(2)].into()
        );
        assert_eq!(
            tamari_interval(&l(3), &t("(. ((. .) .))")).unwrap(),
            [l(3), t("((. (. .)) .)"), t("(. ((. .) .))")].into()
        );
        assert!(tamari_interval(&r(3), &l(3)).unwrap().is_empty());
        assert!(tamari_interval(&r(3), &l(2)).is_err());
    }

    #[test]
    fn tamari_is_partial_order_with_extremal_combs() {
        for n in 1..=6u32 {
            let trees = enumerate_trees(n).unwrap();
            let leq: Vec<Vec<bool>> = trees
                .iter()
                .map(|x| trees.iter().map(|y| tamari_leq(x, y).unwrap()).collect())
                .collect();
            let m = trees.len();
            for i in 0..m {
                assert!(leq[i][i]);
                assert!(leq[trees.binary_search(&l(n)).unwrap()][i]);
                assert!(leq[i][trees.binary_search(&r(n)).unwrap()]);
                for j in 0..m {
                    if i != j {
                        assert!(!(leq[i][j] && leq[j][i]));
                    }
                    let ri = trees.binary_search(&trees[i].reflect()).unwrap();
                    let rj = trees.binary_search(&trees[j].reflect()).unwrap();
                    if leq[i][j] {
                        assert!(leq[rj][ri]);
                    }
                    for k in 0..m {
                        if leq[i][j] && leq[j][k] {
                            assert!(leq[i][k]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn structural_reflection_identities() {
        let levels = enumerate_levels(7);
        for p in 0..=7usize {
            for q in 0..=(7 - p) {
                for x in &levels[p] {
                    for y in &levels[q] {
                        assert_eq!(over(x, y).degree(), x.degree() + y.degree());
                        assert_eq!(under(x, y).degree(), x.degree() + y.degree());
                        let (sx, sy) = (x.reflect(), y.reflect());
                        assert_eq!(
                            Tree::graft(x.clone(), y.clone()).reflect(),
                            Tree::graft(sy.clone(), sx.clone())
                        );
                        assert_eq!(over(x, y).reflect(), under(&sy, &sx));
                        assert_eq!(under(x, y).reflect(), over(&sy, &sx));
                    }
                }
            }
        }
    }
}
