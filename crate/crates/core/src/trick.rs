//! Sum tricks: a pair `(m, z)` such that the sum of the first `n` terms is
//! `z` times the `m`-th term for every sequence sharing a recurrence.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::LinearForm;
use crate::recurrence::{RecurrenceSpec, SequenceDef};
use crate::sequence::{sum_forms, term_forms};
use crate::Integer;

/// How a certificate was confirmed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    /// `sum_form(n) = z * term_form(m)` coordinatewise.
    pub proportional_forms: bool,
    /// `S_n = z * y_m` for each shifted copy `y` of the fundamental solution.
    pub two_basis: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrickKind {
    Proper,
    /// `n = 1`: the single summed term is the answer.
    Identity,
    /// The sum form vanishes, so `z = 0` works against any term.
    ZeroSum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrickCertificate {
    pub n: u64,
    pub m: u64,
    #[serde(with = "crate::serde_int")]
    pub z: Integer,
    pub evidence: Evidence,
    pub kind: TrickKind,
    /// The term forms are periodic, so the same trick recurs at arbitrarily
    /// large `m` beyond the search bound.
    pub periodic: bool,
}

impl TrickCertificate {
    pub fn is_proper(&self) -> bool {
        self.kind == TrickKind::Proper
    }
}

/// Default search bound for `m`.
pub fn default_m_bound(n: u64) -> u64 {
    n + 2
}

/// First `j >= 1` where the window of term forms returns to the initial unit
/// vectors, looking at indices below `limit`.
fn form_period(forms: &[LinearForm], order: usize) -> Option<usize> {
    (1..forms.len().saturating_sub(order - 1)).find(|&j| forms[j..j + order] == forms[..order])
}

/// Checks the trick numerically on `order` shifted copies of the fundamental
/// solution (zeros followed by a one), which form a basis of the solution
/// space. Returns the common `z`, if any.
pub fn two_basis_multiplier(rec: &RecurrenceSpec, n: u64, m: u64) -> Option<Integer> {
    let k = rec.order();
    let horizon = n.max(m) as usize + k;
    let mut fundamental = vec![BigInt::zero(); k - 1];
    fundamental.push(BigInt::one());
    let w: Vec<BigInt> = SequenceDef::like(rec.clone(), fundamental).ok()?.iter().take(horizon).collect();
    let mut z: Option<BigInt> = None;
    let mut pairs = Vec::with_capacity(k);
    for s in 0..k {
        let y = &w[s..];
        let sum: BigInt = y[..n as usize].iter().sum();
        let term = y[m as usize - 1].clone();
        pairs.push((sum, term));
    }
    for (sum, term) in &pairs {
        if term.is_zero() {
            continue;
        }
        let (q, r) = sum.div_rem(term);
        if !r.is_zero() {
            return None;
        }
        z = Some(q);
        break;
    }
    let z = z?;
    pairs.iter().all(|(sum, term)| *sum == &z * term).then_some(z)
}

/// The common trick for sums of `n` terms with the largest `m <= m_bound`.
///
/// The multiplier must be an integer: rational proportionality does not
/// count. When the sum form is identically zero the result is a
/// [`TrickKind::ZeroSum`] certificate with `z = 0` at the bound.
pub fn find_common_trick(rec: &RecurrenceSpec, n: u64, m_bound: u64) -> Option<TrickCertificate> {
    if n == 0 || m_bound == 0 {
        return None;
    }
    let len = m_bound.max(n);
    let k = rec.order();
    let forms = term_forms(rec, len + k as u64);
    let sum = sum_forms(rec, n).pop().expect("n >= 1");
    let periodic = form_period(&forms, k).is_some();
    for m in (1..=m_bound).rev() {
        let term = &forms[m as usize - 1];
        if term.is_zero() {
            continue;
        }
        let Some(z) = sum.multiple_of(term) else { continue };
        let two_basis = two_basis_multiplier(rec, n, m);
        let kind = if z.is_zero() {
            TrickKind::ZeroSum
        } else if n == 1 && m == 1 {
            TrickKind::Identity
        } else {
            TrickKind::Proper
        };
        let evidence = Evidence { proportional_forms: true, two_basis: two_basis.as_ref() == Some(&z) };
        return Some(TrickCertificate { n, m, z, evidence, kind, periodic });
    }
    None
}

/// `find_common_trick` with the default bound for each `n` in `1..=n_max`.
pub fn common_trick_range(rec: &RecurrenceSpec, n_max: u64) -> Vec<(u64, Option<TrickCertificate>)> {
    (1..=n_max).map(|n| (n, find_common_trick(rec, n, default_m_bound(n)))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerformedTrick {
    #[serde(with = "crate::serde_int")]
    pub sum: Integer,
    pub m: u64,
    #[serde(with = "crate::serde_int")]
    pub mth_term: Integer,
    #[serde(with = "crate::serde_int")]
    pub z: Integer,
    pub certificate: TrickCertificate,
}

/// How far on each side of `n` to look for alternatives when no trick exists.
const NEARBY_RADIUS: u64 = 8;

/// Runs the trick on a concrete sequence whose first terms (indices
/// `1..=order`) are `initials`.
pub fn perform_trick(initials: &[Integer], rec: &RecurrenceSpec, n: u64) -> Result<PerformedTrick> {
    if initials.len() != rec.order() {
        return Err(Error::InvalidSequence(format!("expected {} initial terms, got {}", rec.order(), initials.len())));
    }
    if n == 0 {
        return Err(Error::Domain("the trick needs n >= 1".into()));
    }
    let Some(certificate) = find_common_trick(rec, n, default_m_bound(n)) else {
        let nearby = (n.saturating_sub(NEARBY_RADIUS).max(1)..=n + NEARBY_RADIUS)
            .filter(|&c| c != n)
            .filter(|&c| find_common_trick(rec, c, default_m_bound(c)).is_some_and(|t| t.is_proper()))
            .collect();
        return Err(Error::UnsupportedTrick { n, nearby });
    };
    let m = certificate.m;
    let seq = SequenceDef::like(rec.clone(), initials.to_vec())?;
    let terms: Vec<Integer> = seq.iter().take(n.max(m) as usize).collect();
    let sum: Integer = terms[..n as usize].iter().sum();
    let mth_term = terms[m as usize - 1].clone();
    let z = certificate.z.clone();
    debug_assert_eq!(sum, &z * &mth_term);
    Ok(PerformedTrick { sum, m, mth_term, z, certificate })
}

/// Proper common tricks of the `order`-nacci recurrence for `n <= n_max`.
pub fn nnacci_trick_scan(order: usize, n_max: u64) -> Result<Vec<TrickCertificate>> {
    let rec = RecurrenceSpec::nnacci(order)?;
    Ok(common_trick_range(&rec, n_max).into_iter().filter_map(|(_, c)| c.filter(TrickCertificate::is_proper)).collect())
}

/// The three n-nacci identities, checked on linear forms: with `k = order`,
/// the sum of `k` terms is term `k+1`, the sum of `k+1` terms is twice term
/// `k+1`, and the sum of `2k+2` terms is four times term `2k+1`.
pub fn verify_nnacci_theorem(order: usize) -> Result<bool> {
    let rec = RecurrenceSpec::nnacci(order)?;
    let k = order as u64;
    let terms = term_forms(&rec, 2 * k + 2);
    let sums = sum_forms(&rec, 2 * k + 2);
    let term = |i: u64| &terms[i as usize - 1];
    let sum = |i: u64| &sums[i as usize - 1];
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    Ok(*sum(k) == *term(k + 1)
        && *sum(k + 1) == term(k + 1).scale(&two)
        && *sum(2 * k + 2) == term(2 * k + 1).scale(&four))
}
