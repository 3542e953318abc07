//! Acceptance gate: one line per criterion, non-zero exit on any failure.
//!
//! All comparisons are exact set or integer equality; the only tolerances are
//! the wall-clock limits below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use arithmetree::cli::run_command;
use arithmetree::verify::{run_suite, Suite, VerifyConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: Suite,
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        title: "table of trees and groves, n <= 7",
        suite: Suite::Table,
        limit: secs(1),
    },
    Criterion {
        id: 2,
        title: "recursive sum = Tamari interval, degree sum <= 7",
        suite: Suite::Interval,
        limit: secs(120),
    },
    Criterion {
        id: 3,
        title: "total groves respect + and *",
        suite: Suite::Homomorphism,
        limit: secs(120),
    },
    Criterion {
        id: 4,
        title: "associativity, distributivity, counterexamples",
        suite: Suite::Laws,
        limit: secs(300),
    },
    Criterion {
        id: 5,
        title: "reflection identities, total degree <= 6",
        suite: Suite::Sigma,
        limit: secs(60),
    },
    Criterion {
        id: 6,
        title: "count bounds and equality cases",
        suite: Suite::Counts,
        limit: secs(120),
    },
    Criterion {
        id: 7,
        title: "tree factorization vs brute force, degree <= 8",
        suite: Suite::Factor,
        limit: secs(300),
    },
    Criterion {
        id: 8,
        title: "composite counts, n in {4, 6, 8, 9, 10}",
        suite: Suite::Composite,
        limit: secs(600),
    },
    Criterion {
        id: 9,
        title: "unique ordered prime factorization sweep",
        suite: Suite::Ufd,
        limit: secs(1800),
    },
    Criterion {
        id: 10,
        title: "additive irreducibility of trees",
        suite: Suite::Additive,
        limit: secs(300),
    },
    Criterion {
        id: 11,
        title: "word and serialization round-trips",
        suite: Suite::Roundtrip,
        limit: secs(120),
    },
];

/// The `table --max 7` command output, checked against the published column values.
fn table_command() -> Result<(), String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(["arithmetree", "table", "--max", "7"], &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit code {code}"));
    }
    let text = String::from_utf8(out).map_err(|e| e.to_string())?;
    let expected = [
        "1\t1\t1",
        "2\t2\t3",
        "3\t5\t31",
        "4\t14\t16383",
        "5\t42\t4398046511103",
        "6\t132\t5444517870735015415413993718908291383295",
    ];
    let rows: Vec<&str> = text.lines().skip(1).collect();
    if rows.len() != 7 || rows[..6] != expected {
        return Err(format!("unexpected rows {rows:?}"));
    }
    let seven: Vec<&str> = rows[6].split('\t').collect();
    if seven[..2] != ["7", "429"] || seven[2].len() != 130 || !seven[2].starts_with("1386") {
        return Err(format!("unexpected n = 7 row {}", rows[6]));
    }
    Ok(())
}

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = run_suite(c.suite, &config);
        let mut elapsed = start.elapsed();
        let (mut passed, mut body) = match outcome {
            Ok(report) => (report.passed(), report.to_string()),
            Err(e) => (false, format!("  error: {e}\n")),
        };
        if c.id == 1 {
            let start = Instant::now();
            if let Err(e) = table_command() {
                passed = false;
                body.push_str(&format!("  FAIL table command: {e}\n"));
            } else {
                body.push_str("  ok   table command: `table --max 7` rows exact\n");
            }
            elapsed += start.elapsed();
        }
        let in_time = elapsed <= c.limit;
        if !in_time {
            body.push_str(&format!(
                "  FAIL runtime {elapsed:.2?} above limit {:?}\n",
                c.limit
            ));
        }
        let verdict = if passed && in_time { "PASS" } else { "FAIL" };
        failures += usize::from(verdict == "FAIL");
        println!(
            "{verdict} criterion {:>2}: {} ({elapsed:.2?}, limit {:?})",
            c.id, c.title, c.limit
        );
        print!("{body}");
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
