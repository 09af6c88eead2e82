//! Turning sequence flags into a recurrence or a concrete sequence.

use clap::{Args, ValueEnum};
use lucastrick_core::{Integer, RecurrenceSpec, SequenceDef};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedFamily {
    Fibonacci,
    Lucas,
    Pell,
    Jacobsthal,
    Tribonacci,
    SignedFibonacci,
    FibBisection,
}

impl NamedFamily {
    fn sequence(self) -> SequenceDef {
        match self {
            Self::Fibonacci => SequenceDef::fibonacci(),
            Self::Lucas => SequenceDef::lucas(),
            Self::Pell => SequenceDef::pell(),
            Self::Jacobsthal => SequenceDef::jacobsthal(),
            Self::Tribonacci => SequenceDef::tribonacci(),
            Self::SignedFibonacci => SequenceDef::first_kind(-1, -1),
            Self::FibBisection => SequenceDef::first_kind(3, 1),
        }
    }
}

/// Which sequence or recurrence to use.
///
/// A family name, `--p/--q` for `x_n = P x_{n-1} - Q x_{n-2}`, or `--order k`
/// for the k-nacci recurrence.
#[derive(Debug, Clone, Args)]
pub struct SequenceArgs {
    #[arg(long, value_enum, conflicts_with_all = ["p", "order"])]
    pub family: Option<NamedFamily>,
    #[arg(long, allow_hyphen_values = true, requires = "q", conflicts_with = "order")]
    pub p: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "p")]
    pub q: Option<i64>,
    /// Use the second-kind sequence `V(P, Q)` (starts 2, P) instead of `U(P, Q)`.
    #[arg(long, requires = "p")]
    pub second_kind: bool,
    #[arg(long)]
    pub order: Option<usize>,
}

impl SequenceArgs {
    pub fn recurrence(&self) -> Result<RecurrenceSpec, CliError> {
        if let Some(f) = self.family {
            return Ok(f.sequence().recurrence);
        }
        match (self.p, self.q, self.order) {
            (Some(p), Some(q), None) => Ok(RecurrenceSpec::lucas(p, q)),
            (None, None, Some(k)) => RecurrenceSpec::nnacci(k).map_err(CliError::usage),
            _ => Err(CliError::usage("give one of --family, --p/--q or --order")),
        }
    }

    /// The named or canonical sequence (`U`, `V` or the classical k-nacci).
    pub fn sequence(&self) -> Result<SequenceDef, CliError> {
        if let Some(f) = self.family {
            return Ok(f.sequence());
        }
        match (self.p, self.q, self.order) {
            (Some(p), Some(q), None) if self.second_kind => Ok(SequenceDef::second_kind(p, q)),
            (Some(p), Some(q), None) => Ok(SequenceDef::first_kind(p, q)),
            (None, None, Some(k)) => SequenceDef::nnacci(k).map_err(CliError::usage),
            _ => Err(CliError::usage("give one of --family, --p/--q or --order")),
        }
    }
}

pub fn parse_integer(s: &str) -> Result<Integer, String> {
    s.trim().parse::<Integer>().map_err(|e| format!("{s:?}: {e}"))
}
