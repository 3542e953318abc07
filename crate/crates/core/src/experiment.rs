//! Sweeps over groves: uniqueness of ordered prime factorizations, and
//! additive irreducibility of trees.
//!
//! Degrees whose grove space fits the cap are swept exhaustively; larger ones
//! are sampled from a seeded ChaCha stream, so a report is reproducible from
//! its header.

use std::fmt;
use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arithmetic::{add_with, multiply_with};
use crate::count::grove_space_len;
use crate::factor::{exists_sum_decomposition, factor_grove, FactorReport, Primality};
use crate::grove::{total_grove_with, Grove};
use crate::tree::{enumerate_trees_with, Tree};
use crate::{Limits, Result};

/// Grove picked by an independent fair coin per tree; `None` for the empty set.
pub fn coin_flip_grove<R: Rng>(universe: &[Tree], rng: &mut R) -> Option<Grove> {
    let members: Vec<Tree> = universe
        .iter()
        .filter(|_| rng.gen::<bool>())
        .cloned()
        .collect();
    let degree = universe.first()?.degree();
    (!members.is_empty()).then(|| Grove::from_sorted(degree, members))
}

/// Nonempty random grove of the given universe.
pub fn random_grove<R: Rng>(universe: &[Tree], rng: &mut R) -> Grove {
    loop {
        if let Some(g) = coin_flip_grove(universe, rng) {
            return g;
        }
    }
}

/// Stream for one degree of one experiment.
pub fn degree_rng(seed: u64, degree: u32, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(degree) << 8 | stream);
    rng
}

#[derive(Debug, Clone)]
pub struct UfdConfig {
    pub max_degree: u32,
    pub samples_per_degree: usize,
    /// Groves built as `x × y` from random factors, per composite degree.
    pub product_samples_per_degree: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for UfdConfig {
    fn default() -> Self {
        UfdConfig {
            max_degree: 8,
            samples_per_degree: 1000,
            product_samples_per_degree: 500,
            seed: 1,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Exhaustive,
    Sample(usize),
    Product(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordStatus {
    Prime,
    Unique,
    NonUnique,
    /// Unique or prime as far as the searched bounds go.
    Bounded,
}

impl fmt::Display for RecordStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordStatus::Prime => "prime",
            RecordStatus::Unique => "unique",
            RecordStatus::NonUnique => "non-unique",
            RecordStatus::Bounded => "bounded",
        })
    }
}

#[derive(Debug, Clone)]
pub struct UfdRecord {
    pub origin: Origin,
    pub report: FactorReport,
    pub status: RecordStatus,
}

impl UfdRecord {
    fn new(origin: Origin, report: FactorReport) -> UfdRecord {
        let status = if report.factorizations.len() > 1 {
            RecordStatus::NonUnique
        } else if !report.complete || report.primality == Primality::Unknown {
            RecordStatus::Bounded
        } else if report.factorizations.is_empty() {
            RecordStatus::Prime
        } else {
            RecordStatus::Unique
        };
        UfdRecord {
            origin,
            report,
            status,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degree: u32,
    pub exhaustive: bool,
    pub checked: usize,
    pub prime: usize,
    pub unique: usize,
    pub non_unique: usize,
    pub bounded: usize,
    /// Total groves met among the checked groves; they are not factored.
    pub skipped_total: usize,
}

/// Products of total groves over every ordering of the prime factors of `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalCheck {
    pub degree: u32,
    pub orderings: Vec<Vec<u32>>,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct UfdReport {
    pub config: UfdConfig,
    pub summaries: Vec<DegreeSummary>,
    pub records: Vec<UfdRecord>,
    pub totals: Vec<TotalCheck>,
}

impl UfdReport {
    pub fn non_unique(&self) -> impl Iterator<Item = &UfdRecord> {
        self.records
            .iter()
            .filter(|r| r.status == RecordStatus::NonUnique)
    }

    pub fn write_to(&self, out: &mut dyn Write) -> io::Result<()> {
        let c = &self.config;
        writeln!(out, "# experiment ufd")?;
        writeln!(out, "# version {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(out, "# seed {}", c.seed)?;
        writeln!(
            out,
            "# bounds max_degree={} samples={} product_samples={} max_enumerated_groves={} max_search_nodes={} max_count={}",
            c.max_degree,
            c.samples_per_degree,
            c.product_samples_per_degree,
            c.limits.max_enumerated_groves,
            c.limits.max_search_nodes,
            c.limits.max_count
        )?;
        for s in &self.summaries {
            writeln!(
                out,
                "# degree {} {} checked={} prime={} unique={} non-unique={} bounded={} total-skipped={}",
                s.degree,
                if s.exhaustive { "exhaustive" } else { "sampled" },
                s.checked,
                s.prime,
                s.unique,
                s.non_unique,
                s.bounded,
                s.skipped_total
            )?;
        }
        for t in &self.totals {
            let orders: Vec<String> = t
                .orderings
                .iter()
                .map(|o| {
                    o.iter()
                        .map(|p| format!("@{p}"))
                        .collect::<Vec<_>>()
                        .join(" * ")
                })
                .collect();
            writeln!(
                out,
                "# total @{} = {} {}",
                t.degree,
                orders.join(" = "),
                if t.holds { "holds" } else { "FAILS" }
            )?;
        }
        writeln!(out, "# degree\tcount\tgrove\tstatus\tfactorizations")?;
        for r in &self.records {
            let label = match r.origin {
                Origin::Exhaustive => r.report.input.to_string(),
                Origin::Sample(i) => format!("sample-{i}"),
                Origin::Product(i) => format!("product-{i}"),
            };
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.report.input.degree(),
                r.report.input.count(),
                label,
                r.status,
                format_factorizations(&r.report.factorizations)
            )?;
        }
        Ok(())
    }
}

/// `[f1 * f2] [g1 * g2]`, or `-` for none.
pub fn format_factorizations(seqs: &[Vec<Grove>]) -> String {
    if seqs.is_empty() {
        return "-".into();
    }
    seqs.iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(Grove::to_string).collect();
            format!("[{}]", parts.join(" * "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct orderings of a multiset, in lexicographic order.
fn orderings(items: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Next lexicographic permutation until the sequence is descending.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn check_total(degree: u32, limits: &Limits) -> Result<TotalCheck> {
    let orders = orderings(&prime_factors(degree));
    let target = total_grove_with(degree, limits)?;
    let mut holds = true;
    for order in &orders {
        let mut acc = Grove::unit();
        for &p in order {
            acc = multiply_with(&acc, &total_grove_with(p, limits)?, limits)?;
        }
        holds &= acc == target;
    }
    Ok(TotalCheck {
        degree,
        orderings: orders,
        holds,
    })
}

fn candidates_for_degree(n: u32, config: &UfdConfig) -> Result<(bool, Vec<(Origin, Grove)>)> {
    let limits = &config.limits;
    let universe = enumerate_trees_with(n, limits)?;
    if let Some(len) = grove_space_len(n).filter(|&l| l <= limits.max_enumerated_groves) {
        let all = (1..=len).map(|m| (Origin::Exhaustive, Grove::from_mask(n, &universe, m)));
        return Ok((true, all.collect()));
    }
    let mut rng = degree_rng(config.seed, n, 0);
    let mut out = Vec::with_capacity(config.samples_per_degree);
    while out.len() < config.samples_per_degree {
        let g = random_grove(&universe, &mut rng);
        if g.count() < universe.len() {
            out.push((Origin::Sample(out.len()), g));
        }
    }
    let splits: Vec<u32> = (2..n).filter(|a| n.is_multiple_of(*a)).collect();
    if !splits.is_empty() {
        let mut rng = degree_rng(config.seed, n, 1);
        let mut made = 0;
        while made < config.product_samples_per_degree {
            let a = splits[rng.gen_range(0..splits.len())];
            let x = random_grove(&enumerate_trees_with(a, limits)?, &mut rng);
            let y = random_grove(&enumerate_trees_with(n / a, limits)?, &mut rng);
            let p = multiply_with(&x, &y, limits)?;
            if p.count() < universe.len() {
                out.push((Origin::Product(made), p));
                made += 1;
            }
        }
    }
    Ok((false, out))
}

/// Factors every checked grove of degree `1..=max_degree` and records whether
/// its ordered prime factorization is unique.
pub fn ufd_experiment(config: &UfdConfig) -> Result<UfdReport> {
    let mut summaries = Vec::new();
    let mut records = Vec::new();
    let mut totals = Vec::new();
    for n in 1..=config.max_degree {
        let (exhaustive, candidates) = candidates_for_degree(n, config)?;
        let universe_len = enumerate_trees_with(n, &config.limits)?.len();
        let mut summary = DegreeSummary {
            degree: n,
            exhaustive,
            ..DegreeSummary::default()
        };
        let (totals_here, rest): (Vec<_>, Vec<_>) = candidates
            .into_iter()
            .partition(|(_, g)| g.count() == universe_len);
        summary.skipped_total = totals_here.len();
        let found: Vec<UfdRecord> = rest
            .into_par_iter()
            .map(|(origin, g)| factor_grove(&g, &config.limits).map(|r| UfdRecord::new(origin, r)))
            .collect::<Result<_>>()?;
        for r in &found {
            summary.checked += 1;
            match r.status {
                RecordStatus::Prime => summary.prime += 1,
                RecordStatus::Unique => summary.unique += 1,
                RecordStatus::NonUnique => summary.non_unique += 1,
                RecordStatus::Bounded => summary.bounded += 1,
            }
        }
        records.extend(found);
        summaries.push(summary);
        if prime_factors(n).len() >= 2 {
            totals.push(check_total(n, &config.limits)?);
        }
    }
    Ok(UfdReport {
        config: config.clone(),
        summaries,
        records,
        totals,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveRow {
    pub degree: u32,
    pub trees_checked: usize,
    /// Trees found to be a sum `x + y`, with a witness each.
    pub decomposable: Vec<(Tree, Grove, Grove)>,
    /// `@a + @b = @n` for every split `a + b = n`.
    pub total_splits_hold: bool,
    /// The decomposition search finds a witness for `@n`.
    pub total_found: Option<(Grove, Grove)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveReport {
    pub rows: Vec<AdditiveRow>,
}

impl AdditiveReport {
    pub fn write_to(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "# experiment additive")?;
        writeln!(out, "# version {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(
            out,
            "# degree\ttrees\tdecomposable\ttotal-splits\ttotal-witness"
        )?;
        for r in &self.rows {
            let witness = match &r.total_found {
                Some((x, y)) => format!("{x} + {y}"),
                None => "-".into(),
            };
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.degree,
                r.trees_checked,
                r.decomposable.len(),
                if r.total_splits_hold {
                    "holds"
                } else {
                    "FAILS"
                },
                witness
            )?;
            for (t, x, y) in &r.decomposable {
                writeln!(out, "# counterexample {t} = {x} + {y}")?;
            }
        }
        Ok(())
    }
}

/// Sum decompositions of every tree and of the total grove, degrees `2..=max_degree`.
pub fn additive_experiment(max_degree: u32, limits: &Limits) -> Result<AdditiveReport> {
    let mut rows = Vec::new();
    for n in 1..=max_degree {
        let trees = enumerate_trees_with(n, limits)?;
        let found: Vec<Option<(Tree, Grove, Grove)>> = trees
            .par_iter()
            .map(|t| {
                let g = Grove::from_tree(t.clone());
                Ok(exists_sum_decomposition(&g, limits)?.map(|(x, y)| (t.clone(), x, y)))
            })
            .collect::<Result<_>>()?;
        let total = total_grove_with(n, limits)?;
        let mut total_splits_hold = true;
        for a in 1..n {
            let sum = add_with(
                &total_grove_with(a, limits)?,
                &total_grove_with(n - a, limits)?,
                limits,
            )?;
            total_splits_hold &= sum == total;
        }
        let total_found = if n >= 2 {
            exists_sum_decomposition(&total, limits)?
        } else {
            None
        };
        rows.push(AdditiveRow {
            degree: n,
            trees_checked: trees.len(),
            decomposable: found.into_iter().flatten().collect(),
            total_splits_hold,
            total_found,
        });
    }
    Ok(AdditiveReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orderings_of_multisets() {
        assert_eq!(orderings(&[2, 2]), vec![vec![2, 2]]);
        assert_eq!(orderings(&[3, 2]), vec![vec![2, 3], vec![3, 2]]);
        assert_eq!(orderings(&[2, 2, 3]).len(), 3);
        assert_eq!(prime_factors(12), vec![2, 2, 3]);
        assert_eq!(prime_factors(7), vec![7]);
    }

    #[test]
    fn small_sweep_is_reproducible() {
        let config = UfdConfig {
            max_degree: 6,
            samples_per_degree: 20,
            product_samples_per_degree: 5,
            seed: 7,
            limits: Limits::default(),
        };
        let a = ufd_experiment(&config).unwrap();
        let b = ufd_experiment(&config).unwrap();
        let (mut ta, mut tb) = (Vec::new(), Vec::new());
        a.write_to(&mut ta).unwrap();
        b.write_to(&mut tb).unwrap();
        assert_eq!(ta, tb);
        assert_eq!(a.non_unique().count(), 0);
        let three = &a.summaries[2];
        assert!(three.exhaustive);
        assert_eq!(three.checked + three.skipped_total, 31);
        let five = &a.summaries[4];
        assert_eq!(five.prime, five.checked);
        assert!(a.totals.iter().all(|t| t.holds));
    }

    #[test]
    fn additive_small() {
        let r = additive_experiment(4, &Limits::default()).unwrap();
        for row in &r.rows {
            assert!(row.decomposable.is_empty());
            assert!(row.total_splits_hold);
            assert_eq!(row.total_found.is_some(), row.degree >= 2);
        }
    }
}
