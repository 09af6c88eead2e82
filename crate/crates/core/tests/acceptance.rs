//! Acceptance suite: one PASS/FAIL (or WARN) line per criterion.
//!
//! Runs as a plain binary so the report stays readable under `cargo test`.
//! Exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use lucastrick_core::identities::verify_rounding;
use lucastrick_core::*;
use num_bigint::BigInt;

enum Verdict {
    Pass,
    Warn(String),
    Fail(String),
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn forms(v: &[i64]) -> LinearForm {
    LinearForm::from_i64s(v)
}

fn brute(seq: &SequenceDef, n: u64) -> DivisibilityResult {
    max_div_index_bruteforce(seq, n, &ScanConfig::default()).expect("scan")
}

fn check_table(seq: &SequenceDef, rows: &[(u64, u64, i64)], with_i: Option<&[u64]>) -> Verdict {
    let mut bad = Vec::new();
    for (j, &(n, m, z)) in rows.iter().enumerate() {
        let got = brute(seq, n);
        let mut ok = got.m() == Some(m) && got.z() == Some(&big(z));
        if let (Some(is), DivisibilityResult::Found { lucas_index, .. }) = (with_i, &got) {
            ok &= *lucas_index == Some(is[j]);
        }
        if !ok {
            bad.push(format!("n={n}: got {got}"));
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c1() -> Verdict {
    let rows = [
        (1, 2, 1),
        (2, 3, 1),
        (3, 3, 2),
        (4, 2, 7),
        (5, 4, 4),
        (6, 5, 4),
        (7, 4, 11),
        (8, 4, 18),
        (9, 6, 11),
        (10, 7, 11),
        (11, 6, 29),
        (12, 6, 47),
        (13, 8, 29),
        (14, 9, 29),
        (15, 8, 76),
        (16, 8, 123),
        (17, 10, 76),
        (18, 11, 76),
    ];
    let is = [1, 1, 0, 4, 3, 3, 5, 6, 5, 5, 7, 8, 7, 7, 9, 10, 9, 9];
    check_table(&SequenceDef::fibonacci(), &rows, Some(&is))
}

fn c2() -> Verdict {
    let rows = [
        (1, 1, 1),
        (2, 3, 1),
        (3, 3, 2),
        (4, 2, 5),
        (5, 1, 26),
        (6, 5, 4),
        (7, 1, 73),
        (8, 3, 30),
        (9, 4, 28),
        (10, 7, 11),
        (11, 4, 74),
        (12, 4, 120),
        (13, 1, 1361),
        (14, 9, 29),
        (15, 3, 892),
        (16, 5, 525),
        (17, 1, 9346),
        (18, 11, 76),
        (19, 1, 24473),
        (20, 6, 2200),
    ];
    check_table(&SequenceDef::lucas(), &rows, None)
}

fn c3() -> Verdict {
    let rows = [
        (1, 1, 1),
        (2, 1, 3),
        (3, 2, 4),
        (4, 3, 4),
        (5, 1, 49),
        (6, 1, 119),
        (7, 4, 24),
        (8, 5, 24),
        (9, 1, 1681),
        (10, 1, 4059),
        (11, 6, 140),
        (12, 7, 140),
        (13, 1, 57121),
        (14, 1, 137903),
        (15, 8, 816),
        (16, 9, 816),
        (17, 1, 1940449),
        (18, 1, 4684659),
        (19, 10, 4756),
        (20, 11, 4756),
    ];
    check_table(&SequenceDef::pell(), &rows, None)
}

fn c4() -> Verdict {
    let fib = RecurrenceSpec::fibonacci();
    let mut bad = Vec::new();
    for (n, sum, m, term, z) in [
        (1, [1, 0], 1, [1, 0], 1),
        (3, [2, 2], 3, [1, 1], 2),
        (6, [8, 12], 5, [2, 3], 4),
        (10, [55, 88], 7, [5, 8], 11),
    ] {
        let s = sum_form(&fib, n).unwrap();
        let t = term_form(&fib, m).unwrap();
        if s != forms(&sum) || t != forms(&term) || s.multiple_of(&t) != Some(big(z)) {
            bad.push(format!("fibonacci n={n}: {s} vs {t}"));
        }
    }
    let trib = RecurrenceSpec::nnacci(3).unwrap();
    let table: [([i64; 3], [i64; 3]); 10] = [
        ([1, 0, 0], [1, 0, 0]),
        ([0, 1, 0], [1, 1, 0]),
        ([0, 0, 1], [1, 1, 1]),
        ([1, 1, 1], [2, 2, 2]),
        ([1, 2, 2], [3, 4, 4]),
        ([2, 3, 4], [5, 7, 8]),
        ([4, 6, 7], [9, 13, 15]),
        ([7, 11, 13], [16, 24, 28]),
        ([13, 20, 24], [29, 44, 52]),
        ([24, 37, 44], [53, 81, 96]),
    ];
    let terms = term_forms(&trib, 10);
    let sums = sum_forms(&trib, 10);
    for (i, (t, s)) in table.iter().enumerate() {
        if terms[i] != forms(t) || sums[i] != forms(s) {
            bad.push(format!("tribonacci row {}: {} / {}", i + 1, terms[i], sums[i]));
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c5() -> Verdict {
    let plan: [(ClosedFamily, u64, bool); 5] = [
        (ClosedFamily::Fibonacci, 400, false),
        (ClosedFamily::Lucas, 400, true),
        (ClosedFamily::Jacobsthal, 400, false),
        (ClosedFamily::SignedFibonacci, 400, false),
        (ClosedFamily::FibBisection, 200, false),
    ];
    let mut bad = Vec::new();
    for (family, n_max, even_only) in plan {
        let seq = family.sequence();
        for n in 1..=n_max {
            if even_only && n % 2 == 1 {
                continue;
            }
            let b = brute(&seq, n);
            match max_div_index_closed(family, n) {
                Ok(c) if c.result == b => {}
                Ok(c) => bad.push(format!("{} n={n}: closed {} brute {b}", family.name(), c.result)),
                Err(e) => bad.push(format!("{} n={n}: {e}", family.name())),
            }
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c6() -> Verdict {
    let fl = verify_fl_uniqueness(25).unwrap();
    let ll = verify_ll_uniqueness(25).unwrap();
    let mut bad = Vec::new();
    for r in [&fl, &ll] {
        if !r.passed() {
            bad.push(format!("{:?}: {} unclassified {:?}", r.proposition, r.unclassified.len(), r.unclassified));
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c7() -> Verdict {
    let mut bad = Vec::new();
    for family in [FibLucas::Fibonacci, FibLucas::Lucas] {
        let r = verify_rounding(family, 400);
        if !r.passed() || r.pairs_checked == 0 {
            bad.push(format!("{family:?}: inequality {:?} quotient {:?}", r.inequality_failures, r.quotient_failures));
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn all_certificates(rec: &RecurrenceSpec, n_max: u64) -> Vec<TrickCertificate> {
    common_trick_range(rec, n_max).into_iter().filter_map(|(_, c)| c).collect()
}

fn expect_set(
    bad: &mut Vec<String>,
    name: &str,
    rec: RecurrenceSpec,
    want: &dyn Fn(u64) -> bool,
) -> Vec<TrickCertificate> {
    let certs = all_certificates(&rec, 200);
    for c in &certs {
        if !(c.evidence.proportional_forms && c.evidence.two_basis) {
            bad.push(format!("{name} n={}: evidence routes disagree", c.n));
        }
    }
    // n = 1 is the trivial identity for every recurrence
    let got: Vec<u64> = certs.iter().filter(|c| c.kind != TrickKind::Identity).map(|c| c.n).collect();
    let wanted: Vec<u64> = (2..=200).filter(|&n| want(n)).collect();
    if got != wanted {
        bad.push(format!("{name}: got {got:?}"));
    }
    certs
}

fn c8() -> Verdict {
    let mut bad = Vec::new();
    let fib = expect_set(&mut bad, "fibonacci", RecurrenceSpec::fibonacci(), &|n| n == 3 || n % 4 == 2);
    for c in fib.iter().filter(|c| c.n > 1) {
        let closed = max_div_index_closed(ClosedFamily::Fibonacci, c.n).unwrap();
        if closed.result.m() != Some(c.m) {
            bad.push(format!("fibonacci n={}: certificate m={} vs closed {}", c.n, c.m, closed.result));
        }
    }
    let u11 = expect_set(&mut bad, "U(1,1)", RecurrenceSpec::lucas(1, 1), &|n| matches!(n % 6, 1 | 3 | 5 | 0));
    if u11.iter().any(|c| (c.n % 6 == 0) != (c.kind == TrickKind::ZeroSum)) {
        bad.push("U(1,1): zero-sum certificates not exactly at n = 0 mod 6".into());
    }
    expect_set(&mut bad, "jacobsthal", RecurrenceSpec::lucas(1, -2), &|_| false);
    let u31 = expect_set(&mut bad, "U(3,1)", RecurrenceSpec::lucas(3, 1), &|n| n % 2 == 1);
    if let Some(c) = u31.iter().find(|c| c.m != c.n.div_ceil(2)) {
        bad.push(format!("U(3,1) n={}: m={}", c.n, c.m));
    }
    let pell = expect_set(&mut bad, "pell", RecurrenceSpec::lucas(2, -1), &|n| n % 4 == 0);
    let pell_terms: Vec<BigInt> = SequenceDef::pell().iter().take(200).collect();
    for c in pell.iter().filter(|c| c.n % 4 == 0) {
        let k = c.n / 4;
        if c.m != 2 * k + 1 || c.z != 2 * &pell_terms[2 * k as usize] {
            bad.push(format!("pell n={}: (m, z) = ({}, {})", c.n, c.m, c.z));
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c9() -> Verdict {
    let listings: [(OeisId, &[i64]); 6] = [
        (OeisId::A372048, &[2, 3, 2, 2, 4, 5, 4, 4, 6, 7, 6, 6, 8, 9, 8, 8, 10, 11, 10, 10, 12, 13, 12, 12]),
        (OeisId::A372049, &[1, 1, 0, 4, 3, 3, 5, 6, 5, 5, 7, 8, 7, 7, 9, 10, 9, 9, 11, 12, 11, 11, 13, 14]),
        (OeisId::A372050, &[2, 3, 5, 7, 8, 12, 14, 18, 24, 28, 35, 41, 46, 54, 60, 68, 78, 89, 97, 107, 116]),
        (OeisId::A372051, &[1, 0, 3, 5, 9, 11, 16, 20, 23, 29, 33, 39, 47, 53, 62, 70, 77, 87, 95, 105, 117]),
        (OeisId::A372718, &[3, 5, 33, 39, 95, 105, 189, 203, 315, 333, 473, 495, 663, 689]),
        (OeisId::A372225, &[1, 6, 24, 105, 440, 1872, 7917, 33558, 142120, 602085, 2550384]),
    ];
    let mut bad = Vec::new();
    for (id, listing) in listings {
        let got = oeis_sequence(id, listing.len()).unwrap();
        let diffs: Vec<String> = got
            .iter()
            .zip(listing)
            .enumerate()
            .filter(|(_, (g, &w))| **g != big(w))
            .map(|(j, (g, w))| format!("a({})={g} listed {w}", j as u64 + id.offset()))
            .collect();
        if !diffs.is_empty() {
            bad.push(format!("{id}: {}", diffs.join(", ")));
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c10() -> Verdict {
    let mut bad = Vec::new();
    for order in 2..=8 {
        if !verify_nnacci_theorem(order).unwrap() {
            bad.push(format!("theorem fails at order {order}"));
        }
    }
    let scan: Vec<(u64, u64, BigInt)> =
        nnacci_trick_scan(3, 10).unwrap().into_iter().map(|c| (c.n, c.m, c.z)).collect();
    if scan != [(3, 4, big(1)), (4, 4, big(2)), (8, 7, big(4))] {
        bad.push(format!("tribonacci scan {scan:?}"));
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(bad.join("; "))
    }
}

fn c11() -> Verdict {
    let start = Instant::now();
    let big_f = term_fast(FibLucas::Fibonacci, 1_000_000);
    let elapsed = start.elapsed();
    let agree = term_fast(FibLucas::Fibonacci, 100_000) == term(&SequenceDef::fibonacci(), 100_000).unwrap()
        && term_fast(FibLucas::Lucas, 100_000) == term(&SequenceDef::lucas(), 100_000).unwrap();
    // F_{10^6} has 208988 decimal digits
    let digits = big_f.to_string().len();
    match (elapsed < Duration::from_secs(1), agree, digits == 208_988) {
        (true, true, true) => Verdict::Pass,
        _ => Verdict::Fail(format!("{elapsed:?}, agree={agree}, digits={digits}")),
    }
}

fn c12() -> Verdict {
    let seq = SequenceDef::pell();
    let mut bad = Vec::new();
    for n in 1..=200 {
        let b = brute(&seq, n);
        match max_div_index_closed(ClosedFamily::Pell, n) {
            Ok(c) if c.result == b => {}
            Ok(c) => bad.push(format!("n={n}: conjectured {} brute {b}", c.result)),
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Warn(bad.join("; "))
    }
}

/// Label, check and runtime budget.
type Criterion = (&'static str, fn() -> Verdict, Option<Duration>);

fn main() {
    let criteria: [Criterion; 12] = [
        ("1 Fibonacci divisibility table", c1, Some(Duration::from_secs(1))),
        ("2 Lucas divisibility table", c2, Some(Duration::from_secs(1))),
        ("3 Pell divisibility table", c3, Some(Duration::from_secs(1))),
        ("4 symbolic Fibonacci and Tribonacci tables", c4, None),
        ("5 closed forms match brute force", c5, Some(Duration::from_secs(30))),
        ("6 FL and LL product uniqueness (bound 25)", c6, Some(Duration::from_secs(60))),
        ("7 rounding lemmas (n <= 400)", c7, None),
        ("8 common-trick sets (n <= 200)", c8, Some(Duration::from_secs(10))),
        ("9 OEIS prefixes", c9, None),
        ("10 n-nacci theorem and Tribonacci scan", c10, Some(Duration::from_secs(1))),
        ("11 fast doubling", c11, None),
        ("12 Pell maximality conjecture (n <= 200)", c12, None),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let mut verdict = run();
        let elapsed = start.elapsed();
        if let (Verdict::Pass, Some(limit)) = (&verdict, budget) {
            if elapsed > limit {
                verdict = Verdict::Fail(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        match verdict {
            Verdict::Pass => println!("PASS  {name}  [{elapsed:.2?}]"),
            Verdict::Warn(why) => println!("WARN  {name}  [{elapsed:.2?}]: {why}"),
            Verdict::Fail(why) => {
                failed += 1;
                println!("FAIL  {name}  [{elapsed:.2?}]: {why}");
            }
        }
    }
    println!("{} of 12 criteria failed", failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
