//! Primality and factorization of trees and groves, composite counts, and
//! additive decompositions.
//!
//! Composite trees have one of two shapes: `L_k × (| ∨ T)` is a left spine of
//! `k` copies of `T` ending in `| ∨ T`, and `R_k × (T ∨ |)` is its mirror.
//! Grove factorization searches every degree split, enumerating the smaller
//! grove space in full and dividing for the other factor.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::arithmetic::{add_with, multiply_with};
use crate::count::{catalan, grove_space_len};
use crate::grove::Grove;
use crate::tree::{enumerate_trees_with, primitive, Side, Tree};
use crate::{Error, Limits, Result};

/// Largest degree [`brute_force_composites`] will enumerate.
pub const BRUTE_FORCE_MAX_DEGREE: u32 = 10;

/// `z = L_k × (| ∨ T)` or `z = R_k × (T ∨ |)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeFactorization {
    /// Which comb the left factor is.
    pub side: Side,
    /// The primitive tree `L_k` or `R_k`.
    pub left_factor: Tree,
    /// The inherited tree `| ∨ T` or `T ∨ |`.
    pub right_factor: Tree,
    pub k: u32,
    /// Degree of the right factor.
    pub d: u32,
    /// `T`, of degree `d - 1`.
    pub inner: Tree,
}

/// Reads the factorization of a composite tree off its shape.
///
/// Returns `None` for prime trees and for degree `≤ 1`. Every match is
/// checked by recomputing the product.
pub fn shape_factor_tree(t: &Tree) -> Option<TreeFactorization> {
    [Side::Left, Side::Right]
        .into_iter()
        .find_map(|side| match_comb_shape(t, side))
}

fn match_comb_shape(t: &Tree, side: Side) -> Option<TreeFactorization> {
    // Orient so that the spine runs along `spine_of` and T hangs off `off_of`.
    let spine_of = |x: &Tree| match side {
        Side::Left => x.left(),
        Side::Right => x.right(),
    };
    let off_of = |x: &Tree| match side {
        Side::Left => x.right(),
        Side::Right => x.left(),
    };
    let inner = off_of(t);
    if t.is_leaf() || inner.is_leaf() {
        return None;
    }
    let base = match side {
        Side::Left => Tree::graft(Tree::leaf(), inner.clone()),
        Side::Right => Tree::graft(inner.clone(), Tree::leaf()),
    };
    let mut k = 1;
    let mut cur = t.clone();
    loop {
        if cur.is_leaf() || off_of(&cur) != inner {
            return None;
        }
        k += 1;
        let next = spine_of(&cur);
        if next == base {
            break;
        }
        cur = next;
    }
    let left_factor = primitive(side, k).ok()?;
    let product = multiply_with(
        &Grove::from_tree(left_factor.clone()),
        &Grove::from_tree(base.clone()),
        &Limits::default().with_max_degree(u32::MAX),
    )
    .ok()?;
    (product.as_tree() == Some(t)).then(|| TreeFactorization {
        side,
        left_factor,
        d: base.degree(),
        right_factor: base,
        k,
        inner,
    })
}

fn proper_divisors(n: u32) -> impl Iterator<Item = u32> {
    (2..n).filter(move |d| n.is_multiple_of(*d))
}

/// Every tree product `x × y = {z}` with `deg x, deg y ≥ 2` and `deg z = n`,
/// grouped by the product tree.
pub fn composite_tree_products(n: u32) -> Result<BTreeMap<Tree, Vec<(Tree, Tree)>>> {
    if n > BRUTE_FORCE_MAX_DEGREE {
        return Err(Error::resource(format!(
            "brute-force products stop at degree {BRUTE_FORCE_MAX_DEGREE}"
        )));
    }
    let limits = Limits::default();
    let mut out: BTreeMap<Tree, Vec<(Tree, Tree)>> = BTreeMap::new();
    for k in proper_divisors(n) {
        let lefts = enumerate_trees_with(k, &limits)?;
        let rights = enumerate_trees_with(n / k, &limits)?;
        for x in &lefts {
            let gx = Grove::from_tree(x.clone());
            for y in &rights {
                let p = multiply_with(&gx, &Grove::from_tree(y.clone()), &limits)?;
                if let Some(z) = p.as_tree() {
                    out.entry(z.clone())
                        .or_default()
                        .push((x.clone(), y.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Composite trees of degree `n`, by enumerating all products of trees.
pub fn brute_force_composites(n: u32) -> Result<BTreeSet<Tree>> {
    Ok(composite_tree_products(n)?.into_keys().collect())
}

/// Prime trees of degree `n ≥ 2`, by shape.
pub fn prime_trees(n: u32, limits: &Limits) -> Result<Vec<Tree>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    Ok(enumerate_trees_with(n, limits)?
        .into_iter()
        .filter(|t| shape_factor_tree(t).is_none())
        .collect())
}

/// Number of composite trees of degree `n`, three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeCount {
    pub n: u32,
    /// Brute-force product count for `n ≤ 10`, shape count above.
    pub oracle: u64,
    /// Trees of degree `n` that [`shape_factor_tree`] factors.
    pub shape_count: u64,
    /// `2 (-c_1 - c_n + Σ_{d | n} c_d)`, evaluated literally.
    pub printed_formula: i128,
    /// `2 Σ_{d | n, 1 < d < n} c_{d-1}`: one tree per `(side, d, T ∈ Y_{d-1})`.
    pub shape_formula: i128,
}

pub fn composite_count(n: u32, limits: &Limits) -> Result<CompositeCount> {
    if n < 2 {
        return Err(Error::domain("composite counts start at degree 2"));
    }
    let shape_count = enumerate_trees_with(n, limits)?
        .iter()
        .filter(|t| shape_factor_tree(t).is_some())
        .count() as u64;
    let oracle = if n <= BRUTE_FORCE_MAX_DEGREE {
        brute_force_composites(n)?.len() as u64
    } else {
        shape_count
    };
    let c = |k: u32| catalan::<i128>(k);
    let divisor_sum: i128 = (1..=n).filter(|d| n.is_multiple_of(*d)).map(c).sum();
    Ok(CompositeCount {
        n,
        oracle,
        shape_count,
        printed_formula: 2 * (-c(1) - c(n) + divisor_sum),
        shape_formula: 2 * proper_divisors(n).map(|d| c(d - 1)).sum::<i128>(),
    })
}

/// Solutions of a division problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub solutions: Vec<Grove>,
    /// `false` when the search budget ran out; `solutions` is then partial.
    pub complete: bool,
}

/// All groves `y` with `known × y = product` (`side = Right`) or all `x` with
/// `x × known = product` (`side = Left`).
pub fn divide(known: &Grove, product: &Grove, side: Side, limits: &Limits) -> Result<Division> {
    let kd = known.degree();
    if kd < 2 {
        return Err(Error::domain(
            "division needs a known factor of degree at least 2",
        ));
    }
    if !product.degree().is_multiple_of(kd) {
        return Err(Error::domain(format!(
            "degree {kd} does not divide degree {}",
            product.degree()
        )));
    }
    let other = product.degree() / kd;
    if other == 0 {
        return Ok(Division {
            solutions: Vec::new(),
            complete: true,
        });
    }
    let universe = enumerate_trees_with(other, limits)?;
    match side {
        Side::Right => divide_right(known, product, &universe, limits),
        Side::Left => divide_left(known, product, &universe, limits),
    }
}

fn divide_right(
    known: &Grove,
    product: &Grove,
    universe: &[Tree],
    limits: &Limits,
) -> Result<Division> {
    // known × y is monotone in y, so every solution lies inside the candidate set.
    let mut candidates = Vec::new();
    for t in universe {
        let p = multiply_with(known, &Grove::from_tree(t.clone()), limits)?;
        if p.is_subset(product) {
            candidates.push(t.clone());
        }
    }
    let mut search = RightSearch {
        known,
        product,
        candidates: &candidates,
        limits,
        nodes: 0,
        complete: true,
        solutions: Vec::new(),
    };
    if !candidates.is_empty() {
        let all = Grove::from_sorted(universe[0].degree(), candidates.clone());
        if product.is_subset(&multiply_with(known, &all, limits)?) {
            search.run(0, &mut Vec::new(), None)?;
        }
    }
    Ok(Division {
        solutions: search.solutions,
        complete: search.complete,
    })
}

struct RightSearch<'a> {
    known: &'a Grove,
    product: &'a Grove,
    candidates: &'a [Tree],
    limits: &'a Limits,
    nodes: u64,
    complete: bool,
    solutions: Vec<Grove>,
}

impl RightSearch<'_> {
    fn multiply(&self, trees: Vec<Tree>) -> Result<Grove> {
        let degree = self.candidates[0].degree();
        multiply_with(self.known, &Grove::from_sorted(degree, trees), self.limits)
    }

    // `chosen` holds candidates[..i] that were included; `image` is known × chosen.
    fn run(&mut self, i: usize, chosen: &mut Vec<Tree>, image: Option<&Grove>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_search_nodes {
            self.complete = false;
            return Ok(());
        }
        if i == self.candidates.len() {
            if image == Some(self.product) {
                let degree = self.candidates[0].degree();
                self.solutions
                    .push(Grove::from_sorted(degree, chosen.clone()));
            }
            return Ok(());
        }
        // Count bound C(x × y) ≥ C(x) C(y)^deg(x).
        let bound = (self.known.count() as f64)
            * ((chosen.len() + 1) as f64).powi(self.known.degree() as i32);
        if bound <= self.product.count() as f64 {
            chosen.push(self.candidates[i].clone());
            let with = self.multiply(chosen.clone())?;
            if with.is_subset(self.product) {
                self.run(i + 1, chosen, Some(&with))?;
            }
            chosen.pop();
        }
        let mut upper = chosen.clone();
        upper.extend_from_slice(&self.candidates[i + 1..]);
        if !upper.is_empty() {
            upper.sort_unstable();
            if self.product.is_subset(&self.multiply(upper)?) {
                self.run(i + 1, chosen, image)?;
            }
        }
        Ok(())
    }
}

fn divide_left(
    known: &Grove,
    product: &Grove,
    universe: &[Tree],
    limits: &Limits,
) -> Result<Division> {
    // (x ∪ x') × y = x × y ∪ x' × y: solutions are covers of the product by
    // the images of single candidate trees.
    let mut candidates = Vec::new();
    let mut images = Vec::new();
    for t in universe {
        let p = multiply_with(&Grove::from_tree(t.clone()), known, limits)?;
        if p.is_subset(product) {
            images.push(Bits::of_subset(&p, product));
            candidates.push(t.clone());
        }
    }
    let (covers, complete) = enumerate_covers(
        product.count(),
        &images,
        limits.max_search_nodes,
        usize::MAX,
    );
    let degree = universe[0].degree();
    let solutions = covers
        .into_iter()
        .map(|idx| {
            Grove::from_sorted(
                degree,
                idx.into_iter().map(|i| candidates[i].clone()).collect(),
            )
        })
        .collect();
    Ok(Division {
        solutions,
        complete,
    })
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Bits {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Bits {
        let mut b = Bits::empty(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    /// Positions of `part`'s members inside `whole` (`part ⊆ whole`).
    fn of_subset(part: &Grove, whole: &Grove) -> Bits {
        let mut b = Bits::empty(whole.count());
        let members = whole.members();
        for t in part.iter() {
            b.set(members.binary_search(t).expect("subset"));
        }
        b
    }
}

/// Nonempty index sets whose images union to the full target set, at most
/// `max_solutions` of them. The flag is `false` if the budget ran out first.
fn enumerate_covers(
    target_len: usize,
    images: &[Bits],
    budget: u64,
    max_solutions: usize,
) -> (Vec<Vec<usize>>, bool) {
    let full = Bits::full(target_len);
    // suffix[i] = union of images[i..]
    let mut suffix = vec![Bits::empty(target_len); images.len() + 1];
    for i in (0..images.len()).rev() {
        suffix[i] = suffix[i + 1].or(&images[i]);
    }
    if suffix[0] != full {
        return (Vec::new(), true);
    }
    struct State<'a> {
        images: &'a [Bits],
        suffix: &'a [Bits],
        full: &'a Bits,
        out: Vec<Vec<usize>>,
        nodes: u64,
        budget: u64,
        max_solutions: usize,
    }
    fn go(s: &mut State<'_>, i: usize, covered: &Bits, chosen: &mut Vec<usize>) -> bool {
        if s.out.len() >= s.max_solutions {
            return true;
        }
        s.nodes += 1;
        if s.nodes > s.budget {
            return false;
        }
        if covered.or(&s.suffix[i]) != *s.full {
            return true;
        }
        if i == s.images.len() {
            if !chosen.is_empty() {
                s.out.push(chosen.clone());
            }
            return true;
        }
        chosen.push(i);
        let with = covered.or(&s.images[i]);
        let ok = go(s, i + 1, &with, chosen);
        chosen.pop();
        ok && go(s, i + 1, covered, chosen)
    }
    let mut state = State {
        images,
        suffix: &suffix,
        full: &full,
        out: Vec::new(),
        nodes: 0,
        budget,
        max_solutions,
    };
    let complete = go(&mut state, 0, &Bits::empty(target_len), &mut Vec::new());
    (state.out, complete)
}

/// Whether the full set of groves of degree `n` may be enumerated.
fn enumerable(n: u32, limits: &Limits) -> Option<u64> {
    grove_space_len(n).filter(|&len| len <= limits.max_enumerated_groves)
}

/// The side whose grove space is smaller and within the enumeration cap.
fn smaller_space(a: u32, b: u32, limits: &Limits) -> Option<Side> {
    match (enumerable(a, limits), enumerable(b, limits)) {
        (Some(sa), Some(sb)) if sb < sa => Some(Side::Right),
        (Some(_), _) => Some(Side::Left),
        (None, Some(_)) => Some(Side::Right),
        (None, None) => None,
    }
}

/// Every grove of degree `n`, as masks over `Y_n`.
fn all_groves(n: u32, limits: &Limits) -> Result<Vec<Grove>> {
    let universe = enumerate_trees_with(n, limits)?;
    let len = enumerable(n, limits)
        .ok_or_else(|| Error::resource(format!("grove space of degree {n}")))?;
    Ok((1..=len)
        .map(|m| Grove::from_mask(n, &universe, m))
        .collect())
}

/// All ordered pairs `(x, y)` of groves of degree `≥ 2` with `x × y = g`.
pub fn product_splits(g: &Grove, limits: &Limits) -> Result<(Vec<(Grove, Grove)>, bool)> {
    let n = g.degree();
    let mut pairs = Vec::new();
    let mut complete = true;
    for a in proper_divisors(n) {
        let b = n / a;
        match smaller_space(a, b, limits) {
            Some(Side::Left) => {
                for x in all_groves(a, limits)? {
                    let div = divide(&x, g, Side::Right, limits)?;
                    complete &= div.complete;
                    pairs.extend(div.solutions.into_iter().map(|y| (x.clone(), y)));
                }
            }
            Some(Side::Right) => {
                for y in all_groves(b, limits)? {
                    let div = divide(&y, g, Side::Left, limits)?;
                    complete &= div.complete;
                    pairs.extend(div.solutions.into_iter().map(|x| (x, y.clone())));
                }
            }
            None => complete = false,
        }
    }
    Ok((pairs, complete))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    /// Degree `≤ 1`: the zero or the unit grove.
    Unit,
    Prime,
    Composite,
    /// No factorization found, but some split could not be searched in full.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub input: Grove,
    /// Distinct ordered sequences of prime factors whose product is the input;
    /// empty for primes.
    pub factorizations: Vec<Vec<Grove>>,
    pub primality: Primality,
    /// `false` if any search in the recursion was truncated.
    pub complete: bool,
}

impl FactorReport {
    pub fn is_unique(&self) -> bool {
        self.factorizations.len() <= 1
    }
}

#[derive(Clone)]
struct Factored {
    // Full prime factorizations, length ≥ 2.
    seqs: BTreeSet<Vec<Grove>>,
    primality: Primality,
    complete: bool,
}

impl Factored {
    fn sequences_including_self(&self, g: &Grove) -> Vec<Vec<Grove>> {
        match self.primality {
            Primality::Prime | Primality::Unknown => vec![vec![g.clone()]],
            _ => self.seqs.iter().cloned().collect(),
        }
    }
}

/// Prime factorizations of `g` over every degree split.
pub fn factor_grove(g: &Grove, limits: &Limits) -> Result<FactorReport> {
    let mut memo = HashMap::new();
    let f = factor_rec(g, limits, &mut memo)?;
    Ok(FactorReport {
        input: g.clone(),
        factorizations: f.seqs.into_iter().collect(),
        primality: f.primality,
        complete: f.complete,
    })
}

fn factor_rec(g: &Grove, limits: &Limits, memo: &mut HashMap<Grove, Factored>) -> Result<Factored> {
    if let Some(f) = memo.get(g) {
        return Ok(f.clone());
    }
    let result = if g.degree() <= 1 {
        Factored {
            seqs: BTreeSet::new(),
            primality: Primality::Unit,
            complete: true,
        }
    } else if let Some(t) = g.as_tree() {
        // A tree is 1, prime, or the product of exactly two prime trees.
        match shape_factor_tree(t) {
            None => Factored {
                seqs: BTreeSet::new(),
                primality: Primality::Prime,
                complete: true,
            },
            Some(f) => Factored {
                seqs: [vec![
                    Grove::from_tree(f.left_factor),
                    Grove::from_tree(f.right_factor),
                ]]
                .into(),
                primality: Primality::Composite,
                complete: true,
            },
        }
    } else {
        let (pairs, mut complete) = product_splits(g, limits)?;
        let mut seqs = BTreeSet::new();
        for (x, y) in &pairs {
            let fx = factor_rec(x, limits, memo)?;
            let fy = factor_rec(y, limits, memo)?;
            complete &= fx.complete && fy.complete;
            for sx in fx.sequences_including_self(x) {
                for sy in fy.sequences_including_self(y) {
                    let mut s = sx.clone();
                    s.extend(sy.iter().cloned());
                    seqs.insert(s);
                }
            }
        }
        let primality = match (pairs.is_empty(), complete) {
            (false, _) => Primality::Composite,
            (true, true) => Primality::Prime,
            (true, false) => Primality::Unknown,
        };
        Factored {
            seqs,
            primality,
            complete,
        }
    };
    memo.insert(g.clone(), result.clone());
    Ok(result)
}

/// Every pair of nonzero groves `(x, y)` with `x + y = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDecompositions {
    pub solutions: Vec<(Grove, Grove)>,
    pub complete: bool,
}

pub fn sum_decompositions(g: &Grove, limits: &Limits) -> Result<SumDecompositions> {
    search_sums(g, limits, usize::MAX)
}

fn search_sums(g: &Grove, limits: &Limits, max_solutions: usize) -> Result<SumDecompositions> {
    let n = g.degree();
    let mut solutions = Vec::new();
    let mut complete = true;
    for a in 1..n {
        let b = n - a;
        let (enumerate_left, side_degree, other_degree) = match smaller_space(a, b, limits) {
            Some(Side::Left) => (true, a, b),
            Some(Side::Right) => (false, b, a),
            None => {
                complete = false;
                continue;
            }
        };
        let universe = enumerate_trees_with(other_degree, limits)?;
        for known in all_groves(side_degree, limits)? {
            // + distributes over unions on both sides: covers again.
            let mut candidates = Vec::new();
            let mut images = Vec::new();
            for t in &universe {
                let single = Grove::from_tree(t.clone());
                let s = if enumerate_left {
                    add_with(&known, &single, limits)?
                } else {
                    add_with(&single, &known, limits)?
                };
                if s.is_subset(g) {
                    images.push(Bits::of_subset(&s, g));
                    candidates.push(t.clone());
                }
            }
            let wanted = max_solutions - solutions.len();
            let (covers, done) =
                enumerate_covers(g.count(), &images, limits.max_search_nodes, wanted);
            complete &= done;
            for idx in covers {
                let other = Grove::from_sorted(
                    other_degree,
                    idx.into_iter().map(|i| candidates[i].clone()).collect(),
                );
                solutions.push(if enumerate_left {
                    (known.clone(), other)
                } else {
                    (other, known.clone())
                });
            }
            if solutions.len() >= max_solutions {
                return Ok(SumDecompositions {
                    solutions,
                    complete,
                });
            }
        }
    }
    Ok(SumDecompositions {
        solutions,
        complete,
    })
}

/// Some `(x, y)` with `x + y = g`, if one exists.
///
/// A search that ran out of budget without finding one is a resource error.
pub fn exists_sum_decomposition(g: &Grove, limits: &Limits) -> Result<Option<(Grove, Grove)>> {
    let found = search_sums(g, limits, 1)?;
    match found.solutions.into_iter().next() {
        Some(pair) => Ok(Some(pair)),
        None if found.complete => Ok(None),
        None => Err(Error::resource("sum decomposition search was truncated")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::{add, multiply};
    use crate::grove::total_grove;
    use crate::tree::enumerate_trees;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn g(s: &str) -> Grove {
        s.parse().unwrap()
    }

    #[test]
    fn shape_examples() {
        let f = shape_factor_tree(&t("((. (. .)) (. .))")).unwrap();
        assert_eq!(f.left_factor, t("L2"));
        assert_eq!(f.right_factor, t("(. (. .))"));
        assert_eq!((f.k, f.d, f.side), (2, 2, Side::Left));
        assert_eq!(f.inner, t("(. .)"));
        assert!(shape_factor_tree(&t("L4")).is_none());
        for tree in enumerate_trees(5).unwrap() {
            assert!(shape_factor_tree(&tree).is_none());
        }
        let f = shape_factor_tree(&t("((. .) ((. .) .))")).unwrap();
        assert_eq!((f.left_factor, f.right_factor), (t("R2"), t("L2")));
    }

    #[test]
    fn brute_force_examples() {
        let four: Vec<Tree> = brute_force_composites(4).unwrap().into_iter().collect();
        let mut expected = vec![t("((. (. .)) (. .))"), t("((. .) ((. .) .))")];
        expected.sort();
        assert_eq!(four, expected);
        assert!(brute_force_composites(5).unwrap().is_empty());
        assert!(brute_force_composites(1).unwrap().is_empty());
        assert!(brute_force_composites(11).is_err());
    }

    #[test]
    fn composite_counts() {
        let limits = Limits::default();
        assert_eq!(composite_count(5, &limits).unwrap().oracle, 0);
        let four = composite_count(4, &limits).unwrap();
        assert_eq!(four.printed_formula, 4);
        assert_eq!(four.oracle, 2);
        assert_eq!(four.shape_count, 2);
        assert_eq!(four.shape_formula, 2);
        assert!(composite_count(1, &limits).is_err());
    }

    #[test]
    fn division_examples() {
        let limits = Limits::default();
        let product = multiply(&g("L2"), &g("R2")).unwrap();
        let div = divide(&g("L2"), &product, Side::Right, &limits).unwrap();
        assert!(div.complete);
        assert_eq!(div.solutions, vec![g("R2")]);
        let div = divide(&g("@2"), &g("@4"), Side::Right, &limits).unwrap();
        assert!(div.solutions.contains(&g("@2")));
        let div = divide(&g("L2"), &g("L4"), Side::Right, &limits).unwrap();
        assert!(div.solutions.is_empty() && div.complete);
        assert!(divide(&g("L2"), &g("L3"), Side::Right, &limits).is_err());
        assert!(divide(&g("L1"), &g("L3"), Side::Right, &limits).is_err());
    }

    #[test]
    fn division_matches_exhaustive_products() {
        let limits = Limits::default();
        let y2 = all_groves(2, &limits).unwrap();
        let y3 = all_groves(3, &limits).unwrap();
        for x in &y2 {
            for y in &y3 {
                let p = multiply(x, y).unwrap();
                let expect_right: Vec<Grove> = y3
                    .iter()
                    .filter(|c| multiply(x, c).unwrap() == p)
                    .cloned()
                    .collect();
                let mut got = divide(x, &p, Side::Right, &limits).unwrap().solutions;
                got.sort();
                let mut want = expect_right.clone();
                want.sort();
                assert_eq!(got, want, "{x} × ? = {p}");
                for sol in &got {
                    assert_eq!(multiply(x, sol).unwrap(), p);
                }
                let expect_left: Vec<Grove> = y2
                    .iter()
                    .filter(|c| multiply(c, y).unwrap() == p)
                    .cloned()
                    .collect();
                let q = multiply(x, y).unwrap();
                let mut got = divide(y, &q, Side::Left, &limits).unwrap().solutions;
                got.sort();
                let mut want = expect_left;
                want.sort();
                assert_eq!(got, want, "? × {y} = {q}");
            }
        }
    }

    #[test]
    fn factor_examples() {
        let limits = Limits::default();
        let r = factor_grove(&g("((. (. .)) (. .))"), &limits).unwrap();
        assert_eq!(r.factorizations, vec![vec![g("L2"), g("R2")]]);
        let r = factor_grove(&total_grove(4).unwrap(), &limits).unwrap();
        assert!(r.factorizations.contains(&vec![g("@2"), g("@2")]));
        let r = factor_grove(&g("L4"), &limits).unwrap();
        assert_eq!(r.primality, Primality::Prime);
        assert!(r.factorizations.is_empty());
        let r = factor_grove(&g("{L4, R4}"), &limits).unwrap();
        assert!(r.complete);
    }

    #[test]
    fn sum_decomposition_examples() {
        let limits = Limits::default();
        for n in 1..=4 {
            for tree in enumerate_trees(n).unwrap() {
                assert_eq!(
                    exists_sum_decomposition(&Grove::from_tree(tree), &limits).unwrap(),
                    None
                );
            }
        }
        let two = exists_sum_decomposition(&total_grove(2).unwrap(), &limits).unwrap();
        assert_eq!(two, Some((Grove::unit(), Grove::unit())));
        let s = add(&g("L1"), &g("L2")).unwrap();
        let all = sum_decompositions(&s, &limits).unwrap();
        assert!(all.complete);
        assert!(all.solutions.contains(&(g("L1"), g("L2"))));
        for (x, y) in &all.solutions {
            assert_eq!(add(x, y).unwrap(), s);
        }
    }
}
