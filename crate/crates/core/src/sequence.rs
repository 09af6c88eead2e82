//! Terms, partial sums, symbolic forms and modular periods of linear
//! recurrences.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::LinearForm;
use crate::recurrence::{Family, RecurrenceSpec, SequenceDef};
use crate::Integer;

/// Exact `n`-th term by linear iteration.
///
/// Fibonacci and Lucas tags also accept negative `n` through
/// `F_{-n} = (-1)^{n+1} F_n` and `L_{-n} = (-1)^n L_n`.
pub fn term(seq: &SequenceDef, n: i64) -> Result<Integer> {
    if n < 0 {
        let k = n.unsigned_abs();
        let positive = term(seq, k as i64)?;
        let odd = k % 2 == 1;
        return match seq.family {
            Some(Family::Fibonacci) => Ok(if odd { positive } else { -positive }),
            Some(Family::Lucas) => Ok(if odd { -positive } else { positive }),
            _ => Err(Error::IndexOutOfDomain { index: n }),
        };
    }
    let n = n as u64;
    if n < seq.first_index {
        return Err(Error::IndexOutOfDomain { index: n as i64 });
    }
    let offset = usize::try_from(n - seq.first_index)
        .map_err(|_| Error::Domain(format!("index {n} is too large to iterate")))?;
    Ok(seq.iter().nth(offset).expect("term iterator is infinite"))
}

/// Which of the two classical sequences to evaluate with [`term_fast`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FibLucas {
    Fibonacci,
    Lucas,
}

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // F_{2k} = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
        let two_b_minus_a = (&b << 1u32) - &a;
        let c = &a * two_b_minus_a;
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// `n`-th Fibonacci or Lucas number in `O(log n)` multiplications.
pub fn term_fast(family: FibLucas, n: u64) -> Integer {
    let (f, f_next) = fib_pair(n);
    match family {
        FibLucas::Fibonacci => f,
        // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
        FibLucas::Lucas => (f_next << 1u32) - f,
    }
}

/// Sum of the terms at indices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialSumRecord {
    pub n: u64,
    #[serde(with = "crate::serde_int")]
    pub value: Integer,
}

fn check_sum_domain(seq: &SequenceDef, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("partial sums need n >= 1".into()));
    }
    if seq.first_index > 1 {
        return Err(Error::Domain(format!("sequence starts at index {}, partial sums start at 1", seq.first_index)));
    }
    Ok(())
}

/// Partial sums `S_1, S_2, ..., S_count` by direct summation.
pub fn partial_sums(seq: &SequenceDef, count: u64) -> Result<Vec<Integer>> {
    check_sum_domain(seq, count.max(1))?;
    let skip = (1 - seq.first_index) as usize;
    let mut acc = BigInt::zero();
    Ok(seq
        .iter()
        .skip(skip)
        .take(count as usize)
        .map(|t| {
            acc += t;
            acc.clone()
        })
        .collect())
}

/// `S_n` by adding the terms one at a time.
pub fn partial_sum_direct(seq: &SequenceDef, n: u64) -> Result<Integer> {
    check_sum_domain(seq, n)?;
    let skip = (1 - seq.first_index) as usize;
    Ok(seq.iter().skip(skip).take(n as usize).sum())
}

/// `S_n^U = (Q U_n - U_{n+1} + 1) / (Q - P + 1)` for first-kind sequences.
///
/// `None` when the sequence is not first-kind or `Q - P + 1 = 0`.
pub fn partial_sum_closed(seq: &SequenceDef, n: u64) -> Option<Integer> {
    let (p, q) = seq.first_kind_pair()?;
    let denom: Integer = &q - &p + 1;
    if denom.is_zero() || n == 0 {
        return None;
    }
    let mut it = seq.iter().skip(n as usize);
    let u_n = it.next()?;
    let u_next = it.next()?;
    let numer: Integer = q * u_n - u_next + 1;
    let (quot, rem) = numer.div_rem(&denom);
    debug_assert!(rem.is_zero(), "closed-form partial sum must divide exactly");
    Some(quot)
}

/// Exact `S_n`: closed form where it applies, direct summation otherwise.
pub fn partial_sum(seq: &SequenceDef, n: u64) -> Result<PartialSumRecord> {
    check_sum_domain(seq, n)?;
    let value = match partial_sum_closed(seq, n) {
        Some(v) => v,
        None => partial_sum_direct(seq, n)?,
    };
    Ok(PartialSumRecord { n, value })
}

/// Forms of terms `1..=count` over the initial values at indices `1..=order`.
pub fn term_forms(rec: &RecurrenceSpec, count: u64) -> Vec<LinearForm> {
    let k = rec.order();
    let mut forms: Vec<LinearForm> = Vec::with_capacity(count as usize);
    for i in 0..count as usize {
        let form = if i < k {
            LinearForm::unit(k, i)
        } else {
            let mut acc = LinearForm::zero(k);
            for (j, c) in rec.coefficients().iter().enumerate() {
                if !c.is_zero() {
                    acc += &forms[i - 1 - j].scale(c);
                }
            }
            acc
        };
        forms.push(form);
    }
    forms
}

/// Running sums of [`term_forms`]: entry `i` is the form of `S_{i+1}`.
pub fn sum_forms(rec: &RecurrenceSpec, count: u64) -> Vec<LinearForm> {
    let mut acc = LinearForm::zero(rec.order());
    term_forms(rec, count)
        .into_iter()
        .map(|f| {
            acc += &f;
            acc.clone()
        })
        .collect()
}

fn check_form_index(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("symbolic forms are indexed from 1".into()))
    } else {
        Ok(())
    }
}

/// Coefficients of the `n`-th term over the symbolic initial values.
pub fn term_form(rec: &RecurrenceSpec, n: u64) -> Result<LinearForm> {
    check_form_index(n)?;
    Ok(term_forms(rec, n).pop().expect("n >= 1"))
}

/// Coefficients of `S_n` over the symbolic initial values.
pub fn sum_form(rec: &RecurrenceSpec, n: u64) -> Result<LinearForm> {
    check_form_index(n)?;
    Ok(sum_forms(rec, n).pop().expect("n >= 1"))
}

/// Residue cycle of a sequence modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Period {
    /// Terms before the cycle begins; zero when the residues are purely periodic.
    pub preperiod: u64,
    pub period: u64,
    /// One full cycle of residues in `[0, m)`, starting at `first_index + preperiod`.
    pub residues: Vec<u64>,
}

/// Least period of the residues, found by recurrence-state repetition.
pub fn period_mod(seq: &SequenceDef, modulus: u64) -> Result<Period> {
    if modulus < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {modulus}")));
    }
    let m = BigInt::from(modulus);
    let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().expect("residue fits in u64");
    let coeffs: Vec<u128> = seq.recurrence.coefficients().iter().map(|c| reduce(c) as u128).collect();
    let mut window: Vec<u64> = seq.initial_terms.iter().map(reduce).collect();
    let mut residues: Vec<u64> = Vec::new();
    let mut seen: HashMap<Vec<u64>, u64> = HashMap::new();
    loop {
        let idx = residues.len() as u64;
        if let Some(&start) = seen.get(&window) {
            return Ok(Period { preperiod: start, period: idx - start, residues: residues[start as usize..].to_vec() });
        }
        seen.insert(window.clone(), idx);
        residues.push(window[0]);
        let next =
            coeffs.iter().zip(window.iter().rev()).fold(0u128, |acc, (c, x)| (acc + c * *x as u128) % modulus as u128)
                as u64;
        window.rotate_left(1);
        *window.last_mut().expect("order >= 2") = next;
    }
}

/// `true` once the absolute values can no longer decrease.
///
/// Two sound certificates are tried on the window of the last `order` terms:
/// a sign pattern `s^n` turning every coefficient nonnegative (first one at
/// least 1) with a one-signed window, or a dominant first coefficient
/// `|c_1| >= 1 + sum |c_i|` with the newest term largest in absolute value.
pub(crate) fn growth_certified(rec: &RecurrenceSpec, window: &[Integer], newest_index: u64) -> bool {
    let coeffs = rec.coefficients();
    for flip in [false, true] {
        // y_n = s^n x_n  satisfies  y_n = sum (s^i c_i) y_{n-i}
        let sign = |i: u64| if flip && i % 2 == 1 { -1 } else { 1 };
        let transformed_ok = coeffs.iter().enumerate().all(|(i, c)| {
            let t: Integer = c * sign(i as u64 + 1);
            !t.is_negative() && (i > 0 || t >= BigInt::one())
        });
        if !transformed_ok {
            continue;
        }
        let k = window.len() as u64;
        let ys: Vec<BigInt> =
            window.iter().enumerate().map(|(j, x)| x * sign(newest_index + 1 + j as u64 - k)).collect();
        if ys.iter().all(|y| !y.is_negative()) || ys.iter().all(|y| !y.is_positive()) {
            return true;
        }
    }
    let (first, rest) = coeffs.split_first().expect("order >= 2");
    let rest_sum: BigInt = rest.iter().map(|c| c.abs()).sum();
    if first.abs() > rest_sum {
        let newest = window.last().expect("order >= 2").abs();
        return window.iter().all(|x| x.abs() <= newest);
    }
    false
}
