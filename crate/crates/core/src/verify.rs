//! Named verification suites. Each suite checks one family of claims over
//! exhaustive small ranges plus seeded samples and reports one line per check.

use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::arithmetic::{add_with, left_sum_with, multiply_with, right_sum_with};
use crate::cli::format::{format_value, Style};
use crate::cli::parse::parse_expression;
use crate::count::{catalan, grove_space_len, grove_space_size};
use crate::experiment::{additive_experiment, degree_rng, random_grove, ufd_experiment, UfdConfig};
use crate::factor::{
    brute_force_composites, composite_count, composite_tree_products, product_splits,
    shape_factor_tree,
};
use crate::grove::{total_grove_with, Grove, SumTerm};
use crate::tree::{enumerate_levels, over, primitive, tamari_interval, under, Side, Tree};
use crate::word::{evaluate_word, universal_expression};
use crate::{BigCount, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    Table,
    Interval,
    Homomorphism,
    Laws,
    Sigma,
    Counts,
    Factor,
    Composite,
    Ufd,
    Additive,
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Table,
        Suite::Interval,
        Suite::Homomorphism,
        Suite::Laws,
        Suite::Sigma,
        Suite::Counts,
        Suite::Factor,
        Suite::Composite,
        Suite::Ufd,
        Suite::Additive,
        Suite::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Interval => "interval",
            Suite::Homomorphism => "homomorphism",
            Suite::Laws => "laws",
            Suite::Sigma => "sigma",
            Suite::Counts => "counts",
            Suite::Factor => "factor",
            Suite::Composite => "composite",
            Suite::Ufd => "ufd",
            Suite::Additive => "additive",
            Suite::Roundtrip => "roundtrip",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random groves per degree in the factorization sweep.
    pub ufd_samples: usize,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            ufd_samples: 1000,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Informational lines: tables, witnesses, comparison values.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Collector {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Collector {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut out = Collector::default();
    match suite {
        Suite::Table => table_suite(&mut out),
        Suite::Interval => interval_suite(&mut out, config)?,
        Suite::Homomorphism => homomorphism_suite(&mut out, config)?,
        Suite::Laws => laws_suite(&mut out, config)?,
        Suite::Sigma => sigma_suite(&mut out, config)?,
        Suite::Counts => counts_suite(&mut out, config)?,
        Suite::Factor => factor_suite(&mut out, config)?,
        Suite::Composite => composite_suite(&mut out, config)?,
        Suite::Ufd => ufd_suite(&mut out, config)?,
        Suite::Additive => additive_suite(&mut out, config)?,
        Suite::Roundtrip => roundtrip_suite(&mut out, config)?,
    }
    Ok(SuiteReport {
        suite,
        checks: out.checks,
        notes: out.notes,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub degree: u32,
    pub trees: BigCount,
    pub groves: BigCount,
}

pub fn table_rows(max: u32) -> Vec<TableRow> {
    (1..=max)
        .map(|n| TableRow {
            degree: n,
            trees: catalan(n),
            groves: grove_space_size(n),
        })
        .collect()
}

fn table_suite(out: &mut Collector) {
    let rows = table_rows(7);
    let trees: Vec<String> = rows.iter().map(|r| r.trees.to_string()).collect();
    out.check(
        "catalan column",
        trees == ["1", "2", "5", "14", "42", "132", "429"],
        trees.join(", "),
    );
    let expected = [
        "1",
        "3",
        "31",
        "16383",
        "4398046511103",
        "5444517870735015415413993718908291383295",
    ];
    let groves: Vec<String> = rows.iter().map(|r| r.groves.to_string()).collect();
    out.check(
        "grove column n <= 6",
        groves[..6] == expected,
        format!("n = 6: {}", groves[5]),
    );
    let seven = &groves[6];
    out.check(
        "grove column n = 7",
        seven.len() == 130 && seven.starts_with("1386"),
        format!("{} digits, leading {}", seven.len(), &seven[..4]),
    );
    let independent = rows.iter().all(|r| {
        let c: u32 = r.trees.to_string().parse().unwrap();
        r.groves == num_traits::pow(BigCount::from(2u32), c as usize) - 1u32
    });
    out.check("2^c_n - 1 by repeated doubling", independent, "n = 1..7");
}

fn interval_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let levels = enumerate_levels(7);
    let mut pairs = Vec::new();
    for p in 0..=7usize {
        for q in 0..=(7 - p) {
            for x in &levels[p] {
                for y in &levels[q] {
                    pairs.push((x, y));
                }
            }
        }
    }
    let top = pairs
        .iter()
        .filter(|(x, y)| x.degree() + y.degree() == 7)
        .count();
    let mismatches: Vec<String> = pairs
        .par_iter()
        .map(|(x, y)| -> Result<Option<String>> {
            let sum = add_with(
                &Grove::from_tree((*x).clone()),
                &Grove::from_tree((*y).clone()),
                &config.limits,
            )?;
            let interval: Vec<Tree> = tamari_interval(&over(x, y), &under(x, y))?
                .into_iter()
                .collect();
            Ok((sum.members() != interval.as_slice()).then(|| format!("{x} + {y}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.check(
        "x + y = [x/y, x\\y] for deg x + deg y <= 7",
        mismatches.is_empty(),
        format!(
            "{} pairs, {top} at degree 7, {} mismatches {:?}",
            pairs.len(),
            mismatches.len(),
            mismatches.first()
        ),
    );
    Ok(())
}

fn homomorphism_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let l = &config.limits;
    let total = |n| total_grove_with(n, l);
    let mut sums = Vec::new();
    let mut products = Vec::new();
    for m in 0..=7u32 {
        for n in 0..=(7 - m) {
            if add_with(&total(m)?, &total(n)?, l)? != total(m + n)? {
                sums.push(format!("@{m} + @{n}"));
            }
        }
        for n in 0..=7u32 {
            if m * n <= 7 && multiply_with(&total(m)?, &total(n)?, l)? != total(m * n)? {
                products.push(format!("@{m} * @{n}"));
            }
        }
    }
    out.check(
        "@m + @n = @(m+n), m + n <= 7",
        sums.is_empty(),
        format!("failures {sums:?}"),
    );
    out.check(
        "@m * @n = @(mn), mn <= 7",
        products.is_empty(),
        format!("failures {products:?}"),
    );
    Ok(())
}

fn levels_upto(n: u32) -> Vec<Vec<Grove>> {
    enumerate_levels(n)
        .into_iter()
        .map(|level| level.into_iter().map(Grove::from_tree).collect())
        .collect()
}

fn all_groves_of(n: u32) -> Vec<Grove> {
    let universe = enumerate_levels(n).pop().expect("level n");
    let len = grove_space_len(n).expect("small degree");
    (1..=len)
        .map(|m| Grove::from_mask(n, &universe, m))
        .collect()
}

fn laws_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let l = &config.limits;
    let levels = levels_upto(6);
    let mut triples = 0usize;
    let mut failures = Vec::new();
    let mut degree_ok = true;
    for p in 0..=6usize {
        for q in 0..=(6 - p) {
            for r in 0..=(6 - p - q) {
                for x in &levels[p] {
                    for y in &levels[q] {
                        let xy = add_with(x, y, l)?;
                        degree_ok &= xy.degree() == x.degree() + y.degree();
                        for z in &levels[r] {
                            triples += 1;
                            let left = add_with(&xy, z, l)?;
                            let right = add_with(x, &add_with(y, z, l)?, l)?;
                            if left != right {
                                failures.push(format!("{x} {y} {z}"));
                            }
                        }
                    }
                }
            }
        }
    }
    out.check(
        "(x + y) + z = x + (y + z), trees of total degree <= 6",
        failures.is_empty(),
        format!("{triples} triples, failures {:?}", failures.first()),
    );

    // Degree triples (a, b, c) with abc <= 8.
    let mut shapes = Vec::new();
    for a in 1..=8u32 {
        for b in 1..=8 / a {
            for c in 1..=8 / (a * b) {
                shapes.push((a, b, c));
            }
        }
    }
    let universes: Vec<Vec<Tree>> = enumerate_levels(8);
    let mut rng = degree_rng(config.seed, 0, 10);
    let mut mul_failures = Vec::new();
    for _ in 0..200 {
        let &(a, b, c) = shapes.choose(&mut rng).expect("nonempty");
        let x = random_grove(&universes[a as usize], &mut rng);
        let y = random_grove(&universes[b as usize], &mut rng);
        let z = random_grove(&universes[c as usize], &mut rng);
        let xy = multiply_with(&x, &y, l)?;
        degree_ok &= xy.degree() == a * b;
        let left = multiply_with(&xy, &z, l)?;
        let right = multiply_with(&x, &multiply_with(&y, &z, l)?, l)?;
        if left != right {
            mul_failures.push(format!("{x} {y} {z}"));
        }
    }
    out.check(
        "(x * y) * z = x * (y * z), 200 random grove triples",
        mul_failures.is_empty(),
        format!("degree product <= 8, failures {:?}", mul_failures.first()),
    );

    let mut union_failures = 0;
    let mut union_cases = 0;
    for (d, e) in [(2u32, 1u32), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let lefts = all_groves_of(d);
        let rights = all_groves_of(e);
        for (i, a) in lefts.iter().enumerate() {
            for a2 in &lefts[i..] {
                for b in &rights {
                    union_cases += 1;
                    let lhs = multiply_with(&a.union(a2)?, b, l)?;
                    let rhs = multiply_with(a, b, l)?.union(&multiply_with(a2, b, l)?)?;
                    if lhs != rhs {
                        union_failures += 1;
                    }
                }
            }
        }
    }
    out.check(
        "(a ∪ a') * b = a * b ∪ a' * b",
        union_failures == 0,
        format!("{union_cases} cases over degrees (2|3) x (1|2|3), {union_failures} failures"),
    );

    let mut plus_failures = 0;
    let mut plus_cases = 0;
    for p in 1..=3usize {
        for q in 1..=3usize {
            for r in 1..=(8 / (p + q)) {
                for x in &levels[p] {
                    for y in &levels[q] {
                        let s = add_with(x, y, l)?;
                        for z in levels.get(r).into_iter().flatten() {
                            plus_cases += 1;
                            let lhs = multiply_with(&s, z, l)?;
                            let rhs =
                                add_with(&multiply_with(x, z, l)?, &multiply_with(y, z, l)?, l)?;
                            if lhs != rhs {
                                plus_failures += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    out.check(
        "(x + y) * z = x * z + y * z",
        plus_failures == 0,
        format!("{plus_cases} tree triples, (deg x + deg y) deg z <= 8, {plus_failures} failures"),
    );

    let small: Vec<&Grove> = levels[1..=3].iter().flatten().collect();
    let find = |f: &dyn Fn(&Grove, &Grove) -> Result<bool>| -> Result<Option<String>> {
        for x in &small {
            for y in &small {
                if f(x, y)? {
                    return Ok(Some(format!("x = {x}, y = {y}")));
                }
            }
        }
        Ok(None)
    };
    let add_witness = find(&|x, y| Ok(add_with(x, y, l)? != add_with(y, x, l)?))?;
    out.check(
        "x + y != y + x for some trees",
        add_witness.is_some(),
        add_witness.unwrap_or_else(|| "no witness".into()),
    );
    let mul_witness = find(&|x, y| Ok(multiply_with(x, y, l)? != multiply_with(y, x, l)?))?;
    out.check(
        "x * y != y * x for some trees",
        mul_witness.is_some(),
        mul_witness.unwrap_or_else(|| "no witness".into()),
    );
    let mut right_witness = None;
    'search: for x in levels[1..=3].iter().flatten() {
        for y in levels[1..=2].iter().flatten() {
            for z in levels[1..=2].iter().flatten() {
                if x.degree() * (y.degree() + z.degree()) > 6 {
                    continue;
                }
                let lhs = multiply_with(x, &add_with(y, z, l)?, l)?;
                let rhs = add_with(&multiply_with(x, y, l)?, &multiply_with(x, z, l)?, l)?;
                if lhs != rhs {
                    right_witness = Some(format!(
                        "x = {x}, y = {y}, z = {z}: counts {} vs {}",
                        lhs.count(),
                        rhs.count()
                    ));
                    break 'search;
                }
            }
        }
    }
    out.check(
        "x * (y + z) != x * y + x * z at degree <= 6",
        right_witness.is_some(),
        right_witness.unwrap_or_else(|| "no witness".into()),
    );
    out.check(
        "deg is additive and multiplicative",
        degree_ok,
        "on every computed sum and product",
    );
    Ok(())
}

fn sigma_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let l = &config.limits;
    let levels = enumerate_levels(6);
    let (mut add_bad, mut mul_bad, mut graft_bad, mut over_bad, mut cases) = (0, 0, 0, 0, 0);
    for p in 0..=6usize {
        for q in 0..=(6 - p) {
            for x in &levels[p] {
                for y in &levels[q] {
                    cases += 1;
                    let (sx, sy) = (x.reflect(), y.reflect());
                    let (gx, gy) = (Grove::from_tree(x.clone()), Grove::from_tree(y.clone()));
                    let (gsx, gsy) = (Grove::from_tree(sx.clone()), Grove::from_tree(sy.clone()));
                    if add_with(&gx, &gy, l)?.reflect() != add_with(&gsy, &gsx, l)? {
                        add_bad += 1;
                    }
                    if multiply_with(&gx, &gy, l)?.reflect() != multiply_with(&gsx, &gsy, l)? {
                        mul_bad += 1;
                    }
                    if Tree::graft(x.clone(), y.clone()).reflect()
                        != Tree::graft(sy.clone(), sx.clone())
                    {
                        graft_bad += 1;
                    }
                    if over(x, y).reflect() != under(&sy, &sx)
                        || under(x, y).reflect() != over(&sy, &sx)
                    {
                        over_bad += 1;
                    }
                }
            }
        }
    }
    let detail = |bad: usize| format!("{cases} tree pairs of total degree <= 6, {bad} failures");
    out.check("σ(x + y) = σ(y) + σ(x)", add_bad == 0, detail(add_bad));
    out.check("σ(x * y) = σ(x) * σ(y)", mul_bad == 0, detail(mul_bad));
    out.check("σ(x ∨ y) = σ(y) ∨ σ(x)", graft_bad == 0, detail(graft_bad));
    out.check(
        "σ(x/y) = σ(y)\\σ(x) and σ(x\\y) = σ(y)/σ(x)",
        over_bad == 0,
        detail(over_bad),
    );
    let involution = levels.iter().flatten().all(|t| t.reflect().reflect() == *t);
    out.check("σ is an involution", involution, "all trees of degree <= 6");
    let combs = (1..=6)
        .all(|n| primitive(Side::Left, n).unwrap().reflect() == primitive(Side::Right, n).unwrap());
    out.check("σ(L_n) = R_n", combs, "n = 1..6");
    Ok(())
}

/// Count inequalities and their equality cases for one pair of groves.
fn count_bounds(x: &Grove, y: &Grove, l: &Limits) -> Result<[bool; 4]> {
    let (cx, cy) = (x.count() as u128, y.count() as u128);
    let term = |t: SumTerm| t.into_grove().map_or(0, |g| g.count() as u128);
    let lsum = term(left_sum_with(&x.clone().into(), &y.clone().into(), l)?);
    let rsum = term(right_sum_with(&x.clone().into(), &y.clone().into(), l)?);
    let sum = add_with(x, y, l)?.count() as u128;
    // Products stay within degree 8; beyond that only the sums are checked.
    let product = if x.degree() * y.degree() <= 8 {
        multiply_with(x, y, l)?.count() as u128
    } else {
        u128::MAX
    };
    let left_ok = lsum >= cx * cy && ((lsum == cx * cy) == x.is_left_inherited());
    let right_ok = rsum >= cx * cy && ((rsum == cx * cy) == y.is_right_inherited());
    let sum_ok = sum >= 2 * cx * cy
        && ((sum == 2 * cx * cy) == (x.is_left_inherited() && y.is_right_inherited()));
    let product_ok = product >= cx * cy.pow(x.degree());
    Ok([left_ok, right_ok, sum_ok, product_ok])
}

fn counts_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let l = &config.limits;
    let levels = levels_upto(6);
    let names = [
        "C(x ⊣ y) >= C(x)C(y), equality iff x left-inherited",
        "C(x ⊢ y) >= C(x)C(y), equality iff y right-inherited",
        "C(x + y) >= 2C(x)C(y), equality iff x left- and y right-inherited",
        "C(x * y) >= C(x)C(y)^deg x",
    ];
    let mut tree_bad = [0usize; 4];
    let mut tree_cases = 0;
    for p in 1..=5usize {
        for q in 1..=(6 - p) {
            for x in &levels[p] {
                for y in &levels[q] {
                    tree_cases += 1;
                    for (i, ok) in count_bounds(x, y, l)?.into_iter().enumerate() {
                        tree_bad[i] += usize::from(!ok);
                    }
                }
            }
        }
    }
    let universes = enumerate_levels(4);
    let mut rng = degree_rng(config.seed, 0, 11);
    let mut grove_bad = [0usize; 4];
    for _ in 0..500 {
        let p = rng.gen_range(1..=4usize);
        let q = rng.gen_range(1..=4usize);
        let x = random_grove(&universes[p], &mut rng);
        let y = random_grove(&universes[q], &mut rng);
        for (i, ok) in count_bounds(&x, &y, l)?.into_iter().enumerate() {
            grove_bad[i] += usize::from(!ok);
        }
    }
    for i in 0..4 {
        out.check(
            names[i],
            tree_bad[i] == 0 && grove_bad[i] == 0,
            format!(
                "{tree_cases} tree pairs ({} failures), 500 random grove pairs ({} failures){}",
                tree_bad[i],
                grove_bad[i],
                if i == 3 {
                    ", grove products of degree <= 8"
                } else {
                    ""
                }
            ),
        );
    }
    Ok(())
}

fn factor_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let l = &config.limits;
    let levels = enumerate_levels(8);
    let mut disagreements = Vec::new();
    let mut not_unique = Vec::new();
    let mut composites = 0;
    for n in 1..=8u32 {
        let products = composite_tree_products(n)?;
        let oracle = brute_force_composites(n)?;
        for t in &levels[n as usize] {
            let shape = shape_factor_tree(t);
            if shape.is_some() != oracle.contains(t) {
                disagreements.push(t.to_string());
            }
            if let Some(pairs) = products.get(t) {
                composites += 1;
                let expected = shape.map(|f| (f.left_factor, f.right_factor));
                if pairs.len() != 1 || Some(pairs[0].clone()) != expected {
                    not_unique.push(t.to_string());
                }
            }
        }
    }
    out.check(
        "shape classification = brute-force products, degree <= 8",
        disagreements.is_empty(),
        format!(
            "{composites} composite trees, disagreements {:?}",
            disagreements.first()
        ),
    );
    out.check(
        "each composite tree has exactly one ordered pair of tree factors",
        not_unique.is_empty(),
        format!("failures {:?}", not_unique.first()),
    );
    let factor_primes = levels.iter().flatten().all(|t| {
        shape_factor_tree(t).is_none_or(|f| {
            shape_factor_tree(&f.left_factor).is_none()
                && shape_factor_tree(&f.right_factor).is_none()
        })
    });
    out.check(
        "factors of composite trees are prime",
        factor_primes,
        "degree <= 8",
    );
    let mut inherited_prime = true;
    for level in &levels[..8] {
        for t in level {
            let a = Tree::graft(Tree::leaf(), t.clone());
            let b = Tree::graft(t.clone(), Tree::leaf());
            inherited_prime &= shape_factor_tree(&a).is_none() && shape_factor_tree(&b).is_none();
        }
    }
    for k in 1..=8 {
        inherited_prime &= shape_factor_tree(&primitive(Side::Left, k)?).is_none();
        inherited_prime &= shape_factor_tree(&primitive(Side::Right, k)?).is_none();
    }
    out.check(
        "primitive and inherited trees are prime",
        inherited_prime,
        "degree <= 8",
    );

    let l4 = Grove::from_tree(primitive(Side::Left, 4)?);
    let twos = all_groves_of(2);
    let mut hits = Vec::new();
    for x in &twos {
        for y in &twos {
            if multiply_with(x, y, l)? == l4 {
                hits.push(format!("{x} * {y}"));
            }
        }
    }
    let (splits, complete) = product_splits(&l4, l)?;
    out.check(
        "L4 is prime over all 3 x 3 grove pairs of degree 2",
        hits.is_empty() && splits.is_empty() && complete,
        format!(
            "{} products checked, division search {}",
            twos.len() * twos.len(),
            if complete { "complete" } else { "bounded" }
        ),
    );
    Ok(())
}

fn composite_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    out.note("n\toracle\tshape\tshape-formula\tprinted-formula");
    let mut consistent = true;
    let mut parameterized = true;
    for n in [4u32, 6, 8, 9, 10] {
        let c = composite_count(n, &config.limits)?;
        out.note(format!(
            "{}\t{}\t{}\t{}\t{}",
            c.n, c.oracle, c.shape_count, c.shape_formula, c.printed_formula
        ));
        consistent &= c.oracle == c.shape_count;
        parameterized &= i128::from(c.oracle) == c.shape_formula;
    }
    out.check(
        "brute-force count = shape count, n in {4, 6, 8, 9, 10}",
        consistent,
        "see table",
    );
    out.check(
        "count = 2 Σ_{d | n, 1 < d < n} c_{d-1}",
        parameterized,
        "the printed closed form is reported, not asserted",
    );
    Ok(())
}

fn ufd_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let ufd = UfdConfig {
        max_degree: 8,
        samples_per_degree: config.ufd_samples,
        seed: config.seed,
        limits: config.limits,
        ..UfdConfig::default()
    };
    let report = ufd_experiment(&ufd)?;
    for s in &report.summaries {
        out.note(format!(
            "degree {} {}: checked {}, prime {}, unique {}, non-unique {}, bounded {}, total skipped {}",
            s.degree,
            if s.exhaustive { "exhaustive" } else { "sampled" },
            s.checked,
            s.prime,
            s.unique,
            s.non_unique,
            s.bounded,
            s.skipped_total
        ));
    }
    let covered = |n: u32| {
        report
            .summaries
            .iter()
            .find(|s| s.degree == n)
            .map_or(0, |s| s.checked + s.skipped_total)
    };
    out.check(
        "all 31 groves of degree 3",
        covered(3) == 31,
        format!("{}", covered(3)),
    );
    out.check(
        "all 16383 groves of degree 4",
        covered(4) == 16383,
        format!("{}", covered(4)),
    );
    let sampled = (5..=8).all(|n| {
        report
            .summaries
            .iter()
            .any(|s| s.degree == n && !s.exhaustive && s.checked >= config.ufd_samples.min(1000))
    });
    out.check(
        "sampled degrees 5..8",
        sampled,
        format!(
            "{} random groves per degree plus constructed products",
            config.ufd_samples
        ),
    );
    let bad: Vec<String> = report
        .non_unique()
        .map(|r| {
            format!(
                "{} = {}",
                r.report.input,
                crate::experiment::format_factorizations(&r.report.factorizations)
            )
        })
        .collect();
    for line in &bad {
        out.note(format!("counterexample {line}"));
    }
    out.check(
        "unique ordered prime factorization away from total groves",
        bad.is_empty(),
        format!("{} non-unique", bad.len()),
    );
    let bounded: usize = report.summaries.iter().map(|s| s.bounded).sum();
    out.check(
        "every search completed within bounds",
        bounded == 0,
        format!("{bounded} bounded"),
    );
    let primes_clean = report
        .records
        .iter()
        .filter(|r| matches!(r.report.input.degree(), 5 | 7))
        .all(|r| r.report.factorizations.is_empty());
    out.check(
        "no factorization at prime degree 5 and 7",
        primes_clean,
        "sampled",
    );
    let totals: Vec<String> = report
        .totals
        .iter()
        .map(|t| {
            format!(
                "@{}: {} orderings {}",
                t.degree,
                t.orderings.len(),
                if t.holds { "hold" } else { "FAIL" }
            )
        })
        .collect();
    out.check(
        "@n = product of @p over every ordering of prime factors",
        report.totals.iter().all(|t| t.holds),
        totals.join(", "),
    );
    Ok(())
}

fn additive_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let report = additive_experiment(6, &config.limits)?;
    let trees: usize = report.rows.iter().map(|r| r.trees_checked).sum();
    let witnesses: Vec<String> = report
        .rows
        .iter()
        .flat_map(|r| {
            r.decomposable
                .iter()
                .map(|(t, x, y)| format!("{t} = {x} + {y}"))
        })
        .collect();
    out.check(
        "no tree of degree <= 6 is a sum of two groves",
        witnesses.is_empty(),
        format!("{trees} trees, counterexamples {:?}", witnesses.first()),
    );
    let splits = report.rows.iter().all(|r| r.total_splits_hold);
    out.check("@n = @a + @b for every split, n <= 6", splits, "exact");
    let found = report
        .rows
        .iter()
        .filter(|r| r.degree >= 2)
        .all(|r| r.total_found.is_some());
    out.check(
        "decomposition search finds a witness for @n, 2 <= n <= 6",
        found,
        "exact",
    );
    Ok(())
}

fn roundtrip_suite(out: &mut Collector, config: &VerifyConfig) -> Result<()> {
    let l = &config.limits;
    let levels = enumerate_levels(8);
    let unit = Grove::unit();
    let mut word_bad = 0;
    let mut words = 0;
    for t in levels.iter().flatten().filter(|t| !t.is_leaf()) {
        words += 1;
        if evaluate_word(&universal_expression(t)?, &unit)? != Grove::from_tree(t.clone()) {
            word_bad += 1;
        }
    }
    out.check(
        "w_t(@1) = {t}, degree 1..8",
        word_bad == 0,
        format!("{words} trees, {word_bad} failures"),
    );

    let reparse = |g: &Grove, style: Style| -> Result<bool> {
        let text = format_value(g, style);
        Ok(match parse_expression(&text) {
            Ok(e) => e.evaluate(l)? == *g,
            Err(_) => false,
        })
    };
    let mut exhaustive = vec![Grove::zero()];
    for n in 1..=3 {
        exhaustive.extend(all_groves_of(n));
    }
    let mut bad = 0;
    for g in &exhaustive {
        for style in [Style::Canonical, Style::Shorthand] {
            bad += usize::from(!reparse(g, style)?);
        }
    }
    out.check(
        "parse(format(g)) = g, all groves of degree <= 3",
        bad == 0,
        format!(
            "{} groves, canonical and shorthand, {bad} failures",
            exhaustive.len()
        ),
    );
    let mut rng = degree_rng(config.seed, 0, 12);
    let mut sampled_bad = 0;
    for level in &levels[4..=6] {
        for _ in 0..100 {
            let g = random_grove(level, &mut rng);
            for style in [Style::Canonical, Style::Shorthand] {
                sampled_bad += usize::from(!reparse(&g, style)?);
            }
        }
    }
    out.check(
        "parse(format(g)) = g, sampled degrees 4..6",
        sampled_bad == 0,
        format!("300 random groves, {sampled_bad} failures"),
    );
    Ok(())
}
