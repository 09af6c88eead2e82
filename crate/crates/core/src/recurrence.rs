//! Recurrence and sequence definitions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Integer;

/// `x_n = c_1 x_{n-1} + ... + c_k x_{n-k}` with `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RecurrenceSpec {
    #[serde(with = "crate::serde_int::vec")]
    coefficients: Vec<Integer>,
}

impl RecurrenceSpec {
    pub fn new(coefficients: Vec<Integer>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::InvalidSequence(format!(
                "recurrence order must be at least 2, got {}",
                coefficients.len()
            )));
        }
        Ok(Self { coefficients })
    }

    /// The Lucas-pair recurrence `x_n = P x_{n-1} - Q x_{n-2}`.
    pub fn lucas(p: i64, q: i64) -> Self {
        Self { coefficients: vec![BigInt::from(p), -BigInt::from(q)] }
    }

    /// Each term is the sum of the previous `order` terms.
    pub fn nnacci(order: usize) -> Result<Self> {
        Self::new(vec![BigInt::one(); order])
    }

    pub fn fibonacci() -> Self {
        Self::lucas(1, -1)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Integer] {
        &self.coefficients
    }

    /// `(P, Q)` when this is an order-2 recurrence.
    pub fn lucas_pair(&self) -> Option<(Integer, Integer)> {
        match self.coefficients.as_slice() {
            [c1, c2] => Some((c1.clone(), -c2)),
            _ => None,
        }
    }

    /// Next term from a window holding the last `order` terms, oldest first.
    pub(crate) fn step(&self, window: &[Integer]) -> Integer {
        debug_assert_eq!(window.len(), self.order());
        self.coefficients.iter().zip(window.iter().rev()).map(|(c, x)| c * x).sum()
    }
}

/// Named families. The tag drives negative-index support and the closed-form
/// partial sum; it never changes the terms themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Fibonacci,
    Lucas,
    Pell,
    Jacobsthal,
    FirstKind(i64, i64),
    SecondKind(i64, i64),
    Custom,
    /// Classical k-nacci numbers: `k-1` zeros then a one (`T_0 = T_1 = 0, T_2 = 1`).
    Nnacci(usize),
}

/// A concrete sequence: recurrence plus `order` initial terms.
///
/// The initial terms sit at indices `first_index .. first_index + order`.
/// Lucas sequences start at index 0; n-nacci-like inputs after the trick
/// tables start at index 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDef {
    pub recurrence: RecurrenceSpec,
    #[serde(with = "crate::serde_int::vec")]
    pub initial_terms: Vec<Integer>,
    pub first_index: u64,
    pub family: Option<Family>,
}

impl SequenceDef {
    pub fn new(recurrence: RecurrenceSpec, initial_terms: Vec<Integer>, first_index: u64) -> Result<Self> {
        if initial_terms.len() != recurrence.order() {
            return Err(Error::InvalidSequence(format!(
                "expected {} initial terms, got {}",
                recurrence.order(),
                initial_terms.len()
            )));
        }
        Ok(Self { recurrence, initial_terms, first_index, family: Some(Family::Custom) })
    }

    /// A sequence "like" the recurrence, with user values at indices `1..=order`.
    pub fn like(recurrence: RecurrenceSpec, initial_terms: Vec<Integer>) -> Result<Self> {
        Self::new(recurrence, initial_terms, 1)
    }

    /// `U_n(P, Q)`: starts `0, 1`.
    pub fn first_kind(p: i64, q: i64) -> Self {
        let family = match (p, q) {
            (1, -1) => Family::Fibonacci,
            (2, -1) => Family::Pell,
            (1, -2) => Family::Jacobsthal,
            _ => Family::FirstKind(p, q),
        };
        Self {
            recurrence: RecurrenceSpec::lucas(p, q),
            initial_terms: vec![BigInt::zero(), BigInt::one()],
            first_index: 0,
            family: Some(family),
        }
    }

    /// `V_n(P, Q)`: starts `2, P`.
    pub fn second_kind(p: i64, q: i64) -> Self {
        let family = match (p, q) {
            (1, -1) => Family::Lucas,
            _ => Family::SecondKind(p, q),
        };
        Self {
            recurrence: RecurrenceSpec::lucas(p, q),
            initial_terms: vec![BigInt::from(2), BigInt::from(p)],
            first_index: 0,
            family: Some(family),
        }
    }

    pub fn fibonacci() -> Self {
        Self::first_kind(1, -1)
    }

    pub fn lucas() -> Self {
        Self::second_kind(1, -1)
    }

    pub fn pell() -> Self {
        Self::first_kind(2, -1)
    }

    pub fn jacobsthal() -> Self {
        Self::first_kind(1, -2)
    }

    /// Classical k-nacci numbers; `nnacci(3)` is Tribonacci `0, 0, 1, 1, 2, 4, ...`.
    pub fn nnacci(order: usize) -> Result<Self> {
        let recurrence = RecurrenceSpec::nnacci(order)?;
        let mut initial_terms = vec![BigInt::zero(); order];
        initial_terms[order - 1] = BigInt::one();
        Ok(Self { recurrence, initial_terms, first_index: 0, family: Some(Family::Nnacci(order)) })
    }

    pub fn tribonacci() -> Self {
        Self::nnacci(3).expect("order 3 is valid")
    }

    pub fn order(&self) -> usize {
        self.recurrence.order()
    }

    /// `(P, Q)` for a first-kind sequence (`0, 1` start at index 0).
    pub fn first_kind_pair(&self) -> Option<(Integer, Integer)> {
        let pair = self.recurrence.lucas_pair()?;
        (self.first_index == 0 && self.initial_terms[0].is_zero() && self.initial_terms[1].is_one()).then_some(pair)
    }

    /// Terms starting at `first_index`.
    pub fn iter(&self) -> Terms<'_> {
        Terms { recurrence: &self.recurrence, window: self.initial_terms.clone(), emitted: 0 }
    }
}

/// Iterator over the terms of a [`SequenceDef`] from its first index.
#[derive(Debug, Clone)]
pub struct Terms<'a> {
    recurrence: &'a RecurrenceSpec,
    window: Vec<Integer>,
    emitted: usize,
}

impl Iterator for Terms<'_> {
    type Item = Integer;

    fn next(&mut self) -> Option<Integer> {
        let order = self.window.len();
        if self.emitted < order {
            self.emitted += 1;
            return Some(self.window[self.emitted - 1].clone());
        }
        let next = self.recurrence.step(&self.window);
        self.window.rotate_left(1);
        self.window[order - 1] = next.clone();
        self.emitted += 1;
        Some(next)
    }
}
