//! Generators for the integer sequences and pattern tables derived from the
//! Fibonacci and Lucas maximal-divisor data.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::divisibility::{max_div_index_closed, ClosedFamily, DivisibilityResult};
use crate::error::{Error, Result};
use crate::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OeisId {
    /// `m_n` for Fibonacci partial sums.
    A372048,
    /// `i_n`, the Lucas index of the Fibonacci multiplier.
    A372049,
    /// `m_n` at triangular `n`.
    A372050,
    /// `i_n` at triangular `n`.
    A372051,
    /// `i_n` at triangular `n` with `n = 2 (mod 4)`.
    A372718,
    /// `z^L_{4k} / (5 L_{k+1})`.
    A372225,
}

impl OeisId {
    pub const ALL: [OeisId; 6] =
        [Self::A372048, Self::A372049, Self::A372050, Self::A372051, Self::A372718, Self::A372225];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::A372048 => "A372048",
            Self::A372049 => "A372049",
            Self::A372050 => "A372050",
            Self::A372051 => "A372051",
            Self::A372718 => "A372718",
            Self::A372225 => "A372225",
        }
    }

    /// Index of the first term in b-file output.
    pub fn offset(self) -> u64 {
        1
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownOeisId(s.to_string()))
    }
}

fn triangular(k: u64) -> u64 {
    k * (k + 1) / 2
}

fn fib_row(n: u64) -> Result<PatternRow> {
    let closed = max_div_index_closed(ClosedFamily::Fibonacci, n)?;
    match closed.result {
        DivisibilityResult::Found { m, z, lucas_index: Some(i) } => Ok(PatternRow { n, m, z, i }),
        other => Err(Error::Domain(format!("Fibonacci multiplier at n = {n} is not a Lucas number: {other}"))),
    }
}

fn triangular_odd_ns() -> impl Iterator<Item = u64> {
    (1..).map(triangular).filter(|n| n % 4 == 2)
}

/// The first `count` terms of a sequence, starting at offset 1.
pub fn oeis_sequence(id: OeisId, count: usize) -> Result<Vec<Integer>> {
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    let count = count as u64;
    let out = match id {
        OeisId::A372048 => (1..=count).map(|n| fib_row(n).map(|r| r.m.into())).collect::<Result<_>>()?,
        OeisId::A372049 => (1..=count).map(|n| fib_row(n).map(|r| r.i.into())).collect::<Result<_>>()?,
        OeisId::A372050 => (1..=count).map(|k| fib_row(triangular(k)).map(|r| r.m.into())).collect::<Result<_>>()?,
        OeisId::A372051 => (1..=count).map(|k| fib_row(triangular(k)).map(|r| r.i.into())).collect::<Result<_>>()?,
        OeisId::A372718 => {
            triangular_odd_ns().take(count as usize).map(|n| fib_row(n).map(|r| r.i.into())).collect::<Result<_>>()?
        }
        OeisId::A372225 => (1..=count).map(lucas_quarter_cofactor).collect::<Result<_>>()?,
    };
    Ok(out)
}

fn lucas_quarter_cofactor(k: u64) -> Result<Integer> {
    let closed = max_div_index_closed(ClosedFamily::Lucas, 4 * k)?;
    let z = closed.result.z().cloned().expect("Lucas n = 4k always has a divisor");
    let (q, r) = z.div_rem(&BigInt::from(5));
    if r != BigInt::from(0) {
        return Err(Error::Domain(format!("Lucas multiplier at n = {} is not divisible by 5", 4 * k)));
    }
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    /// Triangular `n`.
    Triangular,
    /// `n = 2 (mod 4)`, where `m` is odd.
    OddM,
    /// Triangular `n` with odd `m`.
    TriangularOdd,
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(Self::Triangular),
            "odd_m" | "odd-m" => Ok(Self::OddM),
            "triangular_odd" | "triangular-odd" => Ok(Self::TriangularOdd),
            _ => Err(Error::Domain(format!("unknown pattern kind {s:?}"))),
        }
    }
}

/// `S^F_n = z F_m` with `z = L_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRow {
    pub n: u64,
    pub m: u64,
    #[serde(with = "crate::serde_int")]
    pub z: Integer,
    pub i: u64,
}

pub fn pattern_table(kind: PatternKind, count: usize) -> Result<Vec<PatternRow>> {
    let ns: Vec<u64> = match kind {
        PatternKind::Triangular => (1..=count as u64).map(triangular).collect(),
        PatternKind::OddM => (0..count as u64).map(|k| 4 * k + 2).collect(),
        PatternKind::TriangularOdd => triangular_odd_ns().take(count).collect(),
    };
    ns.into_iter().map(fib_row).collect()
}
