//! Largest-index term dividing a partial sum: exhaustive search, closed forms
//! for the families where they are known, and the Lucas odd-length cycle.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::SequenceDef;
use crate::sequence::{growth_certified, partial_sum, term};
use crate::Integer;

/// Default cap on the number of indices a brute-force scan may probe.
pub const DEFAULT_MAX_SCAN: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_index: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { max_index: DEFAULT_MAX_SCAN }
    }
}

/// Outcome of the search for the largest `m` with `term_m | S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DivisibilityResult {
    /// `S_n = z * term_m`, with `|z| = L_i` when `lucas_index` is present.
    Found {
        m: u64,
        #[serde(with = "crate::serde_int")]
        z: Integer,
        lucas_index: Option<u64>,
    },
    /// Divisors of `S_n` occur at arbitrarily large indices.
    Unbounded,
    NoneFound,
}

impl DivisibilityResult {
    pub fn found(m: u64, z: Integer) -> Self {
        let lucas_index = lucas_index_of(&z);
        Self::Found { m, z, lucas_index }
    }

    pub fn m(&self) -> Option<u64> {
        match self {
            Self::Found { m, .. } => Some(*m),
            _ => None,
        }
    }

    pub fn z(&self) -> Option<&Integer> {
        match self {
            Self::Found { z, .. } => Some(z),
            _ => None,
        }
    }
}

impl fmt::Display for DivisibilityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Found { m, z, lucas_index } => {
                write!(f, "m={m} z={z}")?;
                match lucas_index {
                    Some(i) => write!(f, " i={i}"),
                    None => f.write_str(" i=-"),
                }
            }
            Self::Unbounded => f.write_str("unbounded"),
            Self::NoneFound => f.write_str("none"),
        }
    }
}

/// Smallest `i` with `L_i = |z|` (so `|z| = 1` gives 1).
pub fn lucas_index_of(z: &Integer) -> Option<u64> {
    let target = z.abs();
    if target.is_zero() {
        return None;
    }
    if target == BigInt::from(2) {
        return Some(0);
    }
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::one());
    let mut i = 1u64;
    while cur <= target {
        if cur == target {
            return Some(i);
        }
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
        i += 1;
    }
    None
}

/// Exhaustive search for the largest index whose term divides `S_n`.
///
/// Terms are probed upward from the first index. The scan stops once a term
/// exceeds `|S_n|` and the sequence is certified never to shrink again, or
/// when the exact recurrence state repeats (a periodic sequence), in which
/// case any divisor inside the cycle makes the answer unbounded. No `m <= n`
/// restriction is applied.
pub fn max_div_index_bruteforce(seq: &SequenceDef, n: u64, config: &ScanConfig) -> Result<DivisibilityResult> {
    let sum = partial_sum(seq, n)?.value;
    if sum.is_zero() {
        return Ok(DivisibilityResult::Unbounded);
    }
    let bound = sum.abs();
    let k = seq.order();
    let divides = |t: &BigInt| !t.is_zero() && t.abs() <= bound && sum.is_multiple_of(t);

    let mut terms: Vec<BigInt> = seq.iter().take(k).collect();
    let mut states: HashMap<Vec<BigInt>, usize> = HashMap::new();
    let mut best: Option<usize> = None;
    let mut p = 0usize;
    loop {
        if p as u64 > config.max_index {
            return Err(Error::ScanLimit { limit: config.max_index });
        }
        while terms.len() < p + k {
            let next = seq.recurrence.step(&terms[terms.len() - k..]);
            terms.push(next);
        }
        let state = terms[p..p + k].to_vec();
        if let Some(&start) = states.get(&state) {
            if terms[start..p].iter().any(divides) {
                return Ok(DivisibilityResult::Unbounded);
            }
            break;
        }
        states.insert(state, p);

        if divides(&terms[p]) {
            best = Some(p);
        }
        if p + 1 >= k
            && terms[p].abs() > bound
            && growth_certified(&seq.recurrence, &terms[p + 1 - k..=p], seq.first_index + p as u64)
        {
            break;
        }
        p += 1;
    }
    Ok(match best {
        Some(p) => {
            let z = &sum / &terms[p];
            DivisibilityResult::found(seq.first_index + p as u64, z)
        }
        None => DivisibilityResult::NoneFound,
    })
}

/// Families with a closed form for the largest dividing index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFamily {
    Fibonacci,
    Lucas,
    Jacobsthal,
    Pell,
    /// `U(-1, -1)`: `(-1)^{n-1} F_n`.
    SignedFibonacci,
    /// `U(3, 1)`: `F_{2n}`.
    FibBisection,
}

impl ClosedFamily {
    pub const ALL: [ClosedFamily; 6] =
        [Self::Fibonacci, Self::Lucas, Self::Jacobsthal, Self::Pell, Self::SignedFibonacci, Self::FibBisection];

    pub fn sequence(self) -> SequenceDef {
        match self {
            Self::Fibonacci => SequenceDef::fibonacci(),
            Self::Lucas => SequenceDef::lucas(),
            Self::Jacobsthal => SequenceDef::jacobsthal(),
            Self::Pell => SequenceDef::pell(),
            Self::SignedFibonacci => SequenceDef::first_kind(-1, -1),
            Self::FibBisection => SequenceDef::first_kind(3, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Fibonacci => "fibonacci",
            Self::Lucas => "lucas",
            Self::Jacobsthal => "jacobsthal",
            Self::Pell => "pell",
            Self::SignedFibonacci => "signed-fibonacci",
            Self::FibBisection => "fib-bisection",
        }
    }

    /// The closed family whose canonical sequence is `seq`, if any.
    pub fn of_sequence(seq: &SequenceDef) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.sequence() == *seq)
    }
}

/// How much a closed-form answer can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confidence {
    Theorem,
    /// Small `n` outside a theorem's range, fixed by exhaustive search.
    SpecialCase,
    Conjecture,
    /// Divisibility follows the observed 24-cycle; maximality is unproven.
    EmpiricalCycle,
    /// Produced by the brute-force scan.
    Exhaustive,
}

impl Confidence {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Theorem => "theorem",
            Self::SpecialCase => "special-case",
            Self::Conjecture => "conjecture",
            Self::EmpiricalCycle => "empirical-cycle",
            Self::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormResult {
    pub result: DivisibilityResult,
    pub confidence: Confidence,
}

/// Largest `m` for `U(-1,-1)` below the range where the Fibonacci argument
/// applies. `None` marks `S_2 = 0`.
fn signed_fibonacci_small(n: u64) -> Option<Option<u64>> {
    match n {
        1 => Some(Some(2)),
        2 => Some(None),
        3 => Some(Some(3)),
        5 => Some(Some(3)),
        6 => Some(Some(3)),
        _ => None,
    }
}

/// Closed-form `(m, z)`; `z` is recomputed as `S_n / term_m`.
pub fn max_div_index_closed(family: ClosedFamily, n: u64) -> Result<ClosedFormResult> {
    if n == 0 {
        return Err(Error::Domain("partial sums need n >= 1".into()));
    }
    let (m, confidence) = match family {
        ClosedFamily::Fibonacci => {
            let m = match (n, n % 4) {
                (3, _) => 3,
                (_, 1) => (n - 1) / 2 + 2,
                (_, 2) => (n - 2) / 2 + 3,
                (_, 3) => (n - 3) / 2 + 2,
                _ => n / 2,
            };
            (m, Confidence::Theorem)
        }
        ClosedFamily::Lucas => match n % 4 {
            2 => ((n - 2) / 2 + 3, Confidence::Theorem),
            0 => (n / 4 + 1, Confidence::Theorem),
            _ => (LUCAS_ODD_CYCLE.entry(n.div_ceil(2)), Confidence::EmpiricalCycle),
        },
        ClosedFamily::Jacobsthal => (if n % 2 == 1 { n + 1 } else { n }, Confidence::Theorem),
        ClosedFamily::Pell => {
            let m = match n % 4 {
                1 | 2 => 1,
                3 => n.div_ceil(2),
                _ => n / 2 + 1,
            };
            (m, Confidence::Conjecture)
        }
        ClosedFamily::SignedFibonacci => match signed_fibonacci_small(n) {
            Some(None) => {
                return Ok(ClosedFormResult {
                    result: DivisibilityResult::Unbounded,
                    confidence: Confidence::SpecialCase,
                })
            }
            Some(Some(m)) => (m, Confidence::SpecialCase),
            None => {
                let k = n / 4;
                let m = match n % 4 {
                    0 | 2 => 2 * k,
                    1 => 2 * k - 1,
                    _ => 2 * k + 2,
                };
                (m, Confidence::Theorem)
            }
        },
        ClosedFamily::FibBisection => (n.div_ceil(2), Confidence::Theorem),
    };
    let seq = family.sequence();
    let sum = partial_sum(&seq, n)?.value;
    let t = term(&seq, m as i64)?;
    if t.is_zero() || !sum.is_multiple_of(&t) {
        return Err(Error::Domain(format!(
            "closed form for {} gives m = {m} at n = {n}, which does not divide the sum",
            family.name()
        )));
    }
    Ok(ClosedFormResult { result: DivisibilityResult::found(m, sum / t), confidence })
}

/// Observed indices `x_k` with `L_{x_k} | L_{2k+1} - 3`, cycling with length 24.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTable {
    pub values: [u64; 24],
}

pub const LUCAS_ODD_CYCLE: CycleTable =
    CycleTable { values: [1, 3, 1, 1, 4, 4, 1, 3, 1, 1, 3, 1, 4, 4, 1, 1, 3, 1, 1, 3, 4, 4, 3, 1] };

impl CycleTable {
    /// `x_k` for `k >= 1` (1-based, periodic).
    pub fn entry(&self, k: u64) -> u64 {
        assert!(k >= 1, "cycle entries are 1-based");
        self.values[((k - 1) % 24) as usize]
    }

    /// Checks `L_{x_k} | L_{2k+1} - 3` for every `k` in `1..=bound`.
    pub fn verify(&self, bound: u64) -> bool {
        let lucas_small = [2, 1, 3, 4, 7].map(BigInt::from);
        // (L_{2k+1}, L_{2k+2}) starting at k = 1
        let (mut odd, mut even) = (BigInt::from(4), BigInt::from(7));
        for k in 1..=bound {
            let divisor = &lucas_small[self.entry(k) as usize];
            if !(&odd - 3u32).is_multiple_of(divisor) {
                return false;
            }
            let next_odd = &odd + &even;
            let next_even = &even + &next_odd;
            odd = next_odd;
            even = next_even;
        }
        true
    }
}

/// Default bound for [`lucas_odd_cycle`] verification.
pub const DEFAULT_CYCLE_BOUND: u64 = 1200;

/// The 24-entry cycle and whether it verified for `k <= DEFAULT_CYCLE_BOUND`.
pub fn lucas_odd_cycle() -> (CycleTable, bool) {
    let table = LUCAS_ODD_CYCLE;
    let ok = table.verify(DEFAULT_CYCLE_BOUND);
    (table, ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(seq: &SequenceDef, n: u64) -> DivisibilityResult {
        max_div_index_bruteforce(seq, n, &ScanConfig::default()).unwrap()
    }

    fn found(m: u64, z: i64) -> DivisibilityResult {
        DivisibilityResult::found(m, BigInt::from(z))
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute(&SequenceDef::fibonacci(), 10), found(7, 11));
        assert_eq!(
            brute(&SequenceDef::fibonacci(), 4),
            DivisibilityResult::Found { m: 2, z: BigInt::from(7), lucas_index: Some(4) }
        );
        assert_eq!(brute(&SequenceDef::lucas(), 5), found(1, 26));
        assert_eq!(brute(&SequenceDef::first_kind(1, 1), 6), DivisibilityResult::Unbounded);
        assert_eq!(brute(&SequenceDef::pell(), 12), found(7, 140));
    }

    #[test]
    fn periodic_sequence_with_nonzero_sum_is_unbounded() {
        // U(1,1) partial sums 1, 2, 2, 1: every nonzero term is +-1
        for n in 1..=4 {
            assert_eq!(brute(&SequenceDef::first_kind(1, 1), n), DivisibilityResult::Unbounded);
        }
    }

    #[test]
    fn periodic_sequences() {
        // x_n = -x_{n-2}: period 4 over the integers
        let rec = crate::RecurrenceSpec::new(vec![BigInt::zero(), BigInt::from(-1)]).unwrap();
        // 0, 3, 0, -3, ...: S_1 = 3 and +-3 recurs forever
        let seq = SequenceDef::new(rec.clone(), vec![BigInt::zero(), BigInt::from(3)], 0).unwrap();
        assert_eq!(brute(&seq, 1), DivisibilityResult::Unbounded);
        // 5, 3, -5, -3, ...: S_2 = -2 and no term divides it
        let seq = SequenceDef::new(rec, vec![BigInt::from(5), BigInt::from(3)], 0).unwrap();
        assert_eq!(brute(&seq, 2), DivisibilityResult::NoneFound);
    }

    #[test]
    fn scan_limit_is_reported() {
        let cfg = ScanConfig { max_index: 5 };
        assert_eq!(max_div_index_bruteforce(&SequenceDef::fibonacci(), 30, &cfg), Err(Error::ScanLimit { limit: 5 }));
    }

    #[test]
    fn closed_form_examples() {
        let r = max_div_index_closed(ClosedFamily::Fibonacci, 18).unwrap();
        assert_eq!(r.result, DivisibilityResult::Found { m: 11, z: BigInt::from(76), lucas_index: Some(9) });
        assert_eq!(r.confidence, Confidence::Theorem);
        assert_eq!(max_div_index_closed(ClosedFamily::Lucas, 20).unwrap().result.z(), Some(&BigInt::from(2200)));
        assert_eq!(max_div_index_closed(ClosedFamily::Fibonacci, 3).unwrap().result, found(3, 2));
        let pell = max_div_index_closed(ClosedFamily::Pell, 8).unwrap();
        assert_eq!(pell.result, found(5, 24));
        assert_eq!(pell.confidence, Confidence::Conjecture);
        let odd = max_div_index_closed(ClosedFamily::Lucas, 13).unwrap();
        assert_eq!(odd.confidence, Confidence::EmpiricalCycle);
        assert_eq!(odd.result.m(), Some(1));
        assert!(max_div_index_closed(ClosedFamily::Fibonacci, 0).is_err());
    }

    #[test]
    fn signed_fibonacci_small_cases_match_scan() {
        let seq = ClosedFamily::SignedFibonacci.sequence();
        for n in 1..=12 {
            assert_eq!(max_div_index_closed(ClosedFamily::SignedFibonacci, n).unwrap().result, brute(&seq, n), "n={n}");
        }
        // sign carried by z: S_7 = 9 = U_4 * (-3)
        assert_eq!(max_div_index_closed(ClosedFamily::SignedFibonacci, 7).unwrap().result.z(), Some(&BigInt::from(-3)));
    }

    #[test]
    fn closed_family_lookup() {
        assert_eq!(ClosedFamily::of_sequence(&SequenceDef::first_kind(1, -1)), Some(ClosedFamily::Fibonacci));
        assert_eq!(ClosedFamily::of_sequence(&SequenceDef::second_kind(1, -1)), Some(ClosedFamily::Lucas));
        assert_eq!(ClosedFamily::of_sequence(&SequenceDef::first_kind(-1, -1)), Some(ClosedFamily::SignedFibonacci));
        assert_eq!(ClosedFamily::of_sequence(&SequenceDef::first_kind(1, 1)), None);
    }

    #[test]
    fn lucas_index_examples() {
        assert_eq!(lucas_index_of(&BigInt::from(76)), Some(9));
        assert_eq!(lucas_index_of(&BigInt::from(2)), Some(0));
        assert_eq!(lucas_index_of(&BigInt::from(1)), Some(1));
        assert_eq!(lucas_index_of(&BigInt::from(-4)), Some(3));
        assert_eq!(lucas_index_of(&BigInt::from(5)), None);
        assert_eq!(lucas_index_of(&BigInt::zero()), None);
    }

    #[test]
    fn cycle_examples() {
        let (table, ok) = lucas_odd_cycle();
        assert!(ok);
        assert_eq!(table.entry(1), 1);
        assert_eq!(table.entry(5), 4);
        assert_eq!(table.entry(25), 1);
        // k = 2: (L_5 - 3) / L_3 = 8 / 4
        assert_eq!(table.entry(2), 3);
        let l5 = term(&SequenceDef::lucas(), 5).unwrap();
        assert_eq!((l5 - 3) / BigInt::from(4), BigInt::from(2));
        assert!(table.values.iter().all(|v| [1, 3, 4].contains(v)));
    }

    #[test]
    fn corrupted_cycle_fails_verification() {
        let mut bad = LUCAS_ODD_CYCLE;
        bad.values[0] = 3;
        assert!(!bad.verify(24));
    }

    #[test]
    fn json_round_trip() {
        for r in [found(7, 11), DivisibilityResult::Unbounded, DivisibilityResult::NoneFound, found(2, -1)] {
            let s = serde_json::to_string(&r).unwrap();
            assert_eq!(serde_json::from_str::<DivisibilityResult>(&s).unwrap(), r);
        }
    }
}
