//! Verification suites behind `lucastrick verify`.

use clap::ValueEnum;
use lucastrick_core::identities::verify_rounding;
use lucastrick_core::{
    check_identity_suite, common_trick_range, lucas_odd_cycle, max_div_index_bruteforce, max_div_index_closed,
    nnacci_trick_scan, verify_fl_uniqueness, verify_ll_uniqueness, verify_nnacci_theorem, ClosedFamily, FibLucas,
    RecurrenceSpec, ScanConfig, SequenceDef, TrickKind, UniquenessReport,
};
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Fl,
    Ll,
    Rounding,
    Cycles,
    Tricks,
    Nnacci,
    /// The Pell maximality conjecture; mismatches only warn.
    Pell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Warn => "WARN",
            Self::Fail => "FAIL",
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub summary: String,
    pub details: Vec<String>,
    pub payload: Value,
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

pub fn run(suite: Suite, bound: u64, scan: &ScanConfig) -> Result<Outcome, CliError> {
    match suite {
        Suite::Identities => identities(bound),
        Suite::Fl => Ok(uniqueness(verify_fl_uniqueness(bound).map_err(CliError::usage)?)),
        Suite::Ll => Ok(uniqueness(verify_ll_uniqueness(bound).map_err(CliError::usage)?)),
        Suite::Rounding => Ok(rounding(bound)),
        Suite::Cycles => Ok(cycles(bound)),
        Suite::Tricks => Ok(tricks(bound)),
        Suite::Nnacci => nnacci(bound),
        Suite::Pell => pell(bound, scan),
    }
}

fn identities(bound: u64) -> Result<Outcome, CliError> {
    let report = check_identity_suite(bound).map_err(CliError::usage)?;
    let mut details = Vec::new();
    for f in &report.families {
        let line = match f.working_variant() {
            Some(v) if v.printed => format!("{} ({}): holds [{}]", f.id, f.description, v.form),
            Some(v) => format!("{} ({}): holds with corrected signs [{}]", f.id, f.description, v.form),
            None => format!("{} ({}): FAILS in every variant", f.id, f.description),
        };
        details.push(line);
    }
    let failing = report.families.iter().filter(|f| !f.holds()).count();
    Ok(Outcome {
        status: pass_if(failing == 0),
        summary: format!("{} families, {failing} failing, indices up to {bound}", report.families.len()),
        details,
        payload: serde_json::to_value(&report).expect("serializable"),
    })
}

fn uniqueness(report: UniquenessReport) -> Outcome {
    let details = report.unclassified.iter().map(|q| format!("unclassified {q:?}")).collect();
    Outcome {
        status: pass_if(report.passed()),
        summary: format!(
            "{} unclassified of {} equal-product quadruples, cases {:?}",
            report.unclassified.len(),
            report.quadruples,
            report.case_counts
        ),
        details,
        payload: serde_json::to_value(&report).expect("serializable"),
    }
}

fn rounding(bound: u64) -> Outcome {
    let reports = [verify_rounding(FibLucas::Fibonacci, bound), verify_rounding(FibLucas::Lucas, bound)];
    let details = reports
        .iter()
        .map(|r| {
            format!(
                "{:?}: {} pairs, {} divisible, {} inequality failures, {} quotient failures",
                r.family,
                r.pairs_checked,
                r.divisible_pairs,
                r.inequality_failures.len(),
                r.quotient_failures.len()
            )
        })
        .collect();
    Outcome {
        status: pass_if(reports.iter().all(|r| r.passed())),
        summary: format!("rounding lemmas for n <= {bound}"),
        details,
        payload: serde_json::to_value(&reports).expect("serializable"),
    }
}

fn cycles(bound: u64) -> Outcome {
    let (table, _) = lucas_odd_cycle();
    let ok = table.verify(bound);
    Outcome {
        status: pass_if(ok),
        summary: format!("L_(x_k) divides L_(2k+1) - 3 for k <= {bound}: {ok}"),
        details: Vec::new(),
        payload: json!({ "bound": bound, "cycle": table.values.to_vec(), "holds": ok }),
    }
}

fn tricks(bound: u64) -> Outcome {
    let certs = common_trick_range(&RecurrenceSpec::fibonacci(), bound);
    let got: Vec<u64> =
        certs.iter().filter_map(|(n, c)| c.as_ref().filter(|c| c.kind == TrickKind::Proper).map(|_| *n)).collect();
    let want: Vec<u64> = (2..=bound).filter(|&n| n == 3 || n % 4 == 2).collect();
    let ok = got == want;
    let mut details = Vec::new();
    if !ok {
        details.push(format!("certificates at {got:?}"));
    }
    Outcome {
        status: pass_if(ok),
        summary: format!("Fibonacci-like tricks for n <= {bound} exactly at n = 3 and n = 2 (mod 4): {ok}"),
        details,
        payload: json!({ "bound": bound, "found": got, "expected": want }),
    }
}

fn nnacci(bound: u64) -> Result<Outcome, CliError> {
    if bound < 2 {
        return Err(CliError::usage("the n-nacci suite needs --bound >= 2"));
    }
    let mut details = Vec::new();
    let mut ok = true;
    for order in 2..=bound as usize {
        let holds = verify_nnacci_theorem(order).map_err(CliError::usage)?;
        ok &= holds;
        details.push(format!("order {order}: {}", if holds { "holds" } else { "FAILS" }));
    }
    let scan: Vec<u64> = nnacci_trick_scan(3, 10).map_err(CliError::usage)?.iter().map(|c| c.n).collect();
    let scan_ok = scan == [3, 4, 8];
    details.push(format!("Tribonacci-like tricks for n <= 10 at {scan:?}"));
    Ok(Outcome {
        status: pass_if(ok && scan_ok),
        summary: format!("n-nacci identities for orders 2..={bound}"),
        details,
        payload: json!({ "bound": bound, "theorem": ok, "tribonacci_scan": scan }),
    })
}

fn pell(bound: u64, scan: &ScanConfig) -> Result<Outcome, CliError> {
    let seq = SequenceDef::pell();
    let mut mismatches = Vec::new();
    for n in 1..=bound {
        let b = max_div_index_bruteforce(&seq, n, scan).map_err(CliError::runtime)?;
        let c = max_div_index_closed(ClosedFamily::Pell, n);
        match c {
            Ok(c) if c.result == b => {}
            Ok(c) => mismatches.push(format!("n={n}: conjectured {} brute {b}", c.result)),
            Err(e) => mismatches.push(format!("n={n}: {e}")),
        }
    }
    Ok(Outcome {
        status: if mismatches.is_empty() { Status::Pass } else { Status::Warn },
        summary: format!("Pell conjecture against brute force for n <= {bound}: {} mismatches", mismatches.len()),
        payload: json!({ "bound": bound, "mismatches": mismatches }),
        details: mismatches,
    })
}
