//! Exact terms and partial sums of Lucas sequences and n-nacci sequences,
//! the largest term dividing each partial sum, and "sum tricks" that hold for
//! every sequence sharing a recurrence.
//!
//! All values are arbitrary-precision integers ([`Integer`]); nothing here
//! rounds.

pub mod divisibility;
pub mod error;
pub mod form;
pub mod identities;
pub mod oeis;
pub mod recurrence;
pub mod sequence;
pub mod serde_int;
pub mod trick;

/// Signed arbitrary-precision integer used for every value.
pub type Integer = num_bigint::BigInt;

pub use divisibility::{
    lucas_index_of, lucas_odd_cycle, max_div_index_bruteforce, max_div_index_closed, ClosedFamily, ClosedFormResult,
    Confidence, CycleTable, DivisibilityResult, ScanConfig,
};
pub use error::{Error, Result};
pub use form::LinearForm;
pub use identities::{
    check_identity_suite, check_rounding_lemma, fl_decompose, ll_decompose, verify_fl_uniqueness, verify_ll_uniqueness,
    CaseLabel, Decompositions, IdentityReport, ProductDecomposition, Proposition, UniquenessReport,
};
pub use oeis::{oeis_sequence, pattern_table, OeisId, PatternKind, PatternRow};
pub use recurrence::{Family, RecurrenceSpec, SequenceDef};
pub use sequence::{
    partial_sum, partial_sum_closed, partial_sum_direct, partial_sums, period_mod, sum_form, sum_forms, term,
    term_fast, term_form, term_forms, FibLucas, PartialSumRecord, Period,
};
pub use trick::{
    common_trick_range, find_common_trick, nnacci_trick_scan, perform_trick, two_basis_multiplier,
    verify_nnacci_theorem, Evidence, PerformedTrick, TrickCertificate, TrickKind,
};
