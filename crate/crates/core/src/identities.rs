//! Exhaustive checks of Fibonacci/Lucas product identities, the uniqueness of
//! `F_a L_b` and `L_a L_b` decompositions, and the integer form of the
//! rounding lemmas.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::SequenceDef;
use crate::sequence::{term_fast, FibLucas};
use crate::Integer;

/// Fibonacci and Lucas values on `[0, max]`, with reflection for negative
/// indices.
#[derive(Debug, Clone)]
pub(crate) struct FibLucasTable {
    fib: Vec<BigInt>,
    luc: Vec<BigInt>,
}

impl FibLucasTable {
    pub(crate) fn new(max: usize) -> Self {
        let fib: Vec<BigInt> = SequenceDef::fibonacci().iter().take(max + 1).collect();
        let luc: Vec<BigInt> = SequenceDef::lucas().iter().take(max + 1).collect();
        Self { fib, luc }
    }

    pub(crate) fn f(&self, i: i64) -> BigInt {
        let v = &self.fib[i.unsigned_abs() as usize];
        // F_{-n} = (-1)^{n+1} F_n
        if i < 0 && i % 2 == 0 {
            -v
        } else {
            v.clone()
        }
    }

    pub(crate) fn l(&self, i: i64) -> BigInt {
        let v = &self.luc[i.unsigned_abs() as usize];
        // L_{-n} = (-1)^n L_n
        if i < 0 && i % 2 != 0 {
            -v
        } else {
            v.clone()
        }
    }
}

fn sign(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `F_a L_b` or `L_a L_b` depending on context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDecomposition {
    pub a: u64,
    pub b: u64,
    #[serde(with = "crate::serde_int")]
    pub value: Integer,
}

/// All index pairs realizing a product.
///
/// For the value 0 the decompositions form the infinite family `a = 0` (any
/// `b`), reported through `zero_family` with no explicit pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decompositions {
    pub pairs: Vec<ProductDecomposition>,
    pub zero_family: bool,
}

impl Decompositions {
    pub fn index_pairs(&self) -> Vec<(u64, u64)> {
        self.pairs.iter().map(|p| (p.a, p.b)).collect()
    }
}

/// All `(a, b)` in `[0, index_bound]^2` with `F_a L_b = value`.
pub fn fl_decompose(value: &Integer, index_bound: u64) -> Result<Decompositions> {
    if value.is_negative() {
        return Err(Error::Domain("products of Fibonacci and Lucas numbers are nonnegative".into()));
    }
    if value.is_zero() {
        return Ok(Decompositions { pairs: Vec::new(), zero_family: true });
    }
    let t = FibLucasTable::new(index_bound as usize);
    let mut pairs = Vec::new();
    for a in 1..=index_bound {
        let f = &t.fib[a as usize];
        if !value.is_multiple_of(f) {
            continue;
        }
        for b in 0..=index_bound {
            if f * &t.luc[b as usize] == *value {
                pairs.push(ProductDecomposition { a, b, value: value.clone() });
            }
        }
    }
    Ok(Decompositions { pairs, zero_family: false })
}

/// All unordered `{a, b}` (reported with `a <= b`) with `L_a L_b = value`.
pub fn ll_decompose(value: &Integer, index_bound: u64) -> Result<Decompositions> {
    if !value.is_positive() {
        return Err(Error::Domain("products of Lucas numbers are positive".into()));
    }
    let t = FibLucasTable::new(index_bound as usize);
    let mut pairs = Vec::new();
    for a in 0..=index_bound {
        for b in a..=index_bound {
            if &t.luc[a as usize] * &t.luc[b as usize] == *value {
                pairs.push(ProductDecomposition { a, b, value: value.clone() });
            }
        }
    }
    Ok(Decompositions { pairs, zero_family: false })
}

/// Smallest bound that makes a decomposition scan complete for `value`:
/// the first index whose term exceeds `value`, plus 2 for the `F_1 = F_2`
/// plateau.
pub fn decomposition_bound(value: &Integer) -> u64 {
    let mut i = 0u64;
    for f in SequenceDef::fibonacci().iter() {
        if f > *value {
            break;
        }
        i += 1;
    }
    i + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Proposition {
    /// `F_a L_b = F_c L_d`
    FL,
    /// `L_a L_b = L_c L_d`
    LL,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaseLabel {
    pub proposition: Proposition,
    pub case_number: u8,
}

const FL_EXCEPTIONS: [[u64; 4]; 5] = [[1, 3, 3, 0], [2, 3, 3, 0], [3, 1, 1, 0], [3, 1, 2, 0], [3, 2, 4, 0]];
const LL_EXCEPTIONS: [[u64; 4]; 4] = [[0, 0, 1, 3], [0, 0, 3, 1], [1, 3, 0, 0], [3, 1, 0, 0]];

fn fl_case(case: u8, [a, b, c, d]: [u64; 4]) -> bool {
    match case {
        1 => a == c && b == d,
        2 => a == 0 && c == 0,
        3 => b == d && ((a, c) == (1, 2) || (a, c) == (2, 1)),
        4 => a == b && c == 2 * a && d == 1,
        5 => FL_EXCEPTIONS.contains(&[a, b, c, d]),
        _ => false,
    }
}

/// Case of the `F_a L_b = F_c L_d` uniqueness statement explaining a
/// quadruple. The statement lists each case with `a + b >= c + d`, so both
/// orientations of the equality are tried.
pub fn classify_fl(q: [u64; 4]) -> Option<CaseLabel> {
    let [a, b, c, d] = q;
    (1..=5)
        .find(|&case| fl_case(case, q) || fl_case(case, [c, d, a, b]))
        .map(|case_number| CaseLabel { proposition: Proposition::FL, case_number })
}

/// Case of the `L_a L_b = L_c L_d` uniqueness statement explaining a quadruple.
pub fn classify_ll([a, b, c, d]: [u64; 4]) -> Option<CaseLabel> {
    let case_number = if a == c && b == d {
        1
    } else if a == d && b == c {
        2
    } else if LL_EXCEPTIONS.contains(&[a, b, c, d]) {
        3
    } else {
        return None;
    };
    Some(CaseLabel { proposition: Proposition::LL, case_number })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub proposition: Proposition,
    pub index_bound: u64,
    /// Ordered quadruples with equal products.
    pub quadruples: u64,
    pub case_counts: BTreeMap<u8, u64>,
    /// Quadruples no listed case explains, sorted.
    pub unclassified: Vec<[u64; 4]>,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.unclassified.is_empty()
    }
}

fn verify_uniqueness(
    proposition: Proposition,
    index_bound: u64,
    left: impl Fn(&FibLucasTable, usize) -> &BigInt,
    classify: fn([u64; 4]) -> Option<CaseLabel>,
) -> UniquenessReport {
    let t = FibLucasTable::new(index_bound as usize);
    let mut buckets: HashMap<BigInt, Vec<(u64, u64)>> = HashMap::new();
    for a in 0..=index_bound {
        for b in 0..=index_bound {
            let v = left(&t, a as usize) * &t.luc[b as usize];
            buckets.entry(v).or_default().push((a, b));
        }
    }
    let mut report = UniquenessReport {
        proposition,
        index_bound,
        quadruples: 0,
        case_counts: BTreeMap::new(),
        unclassified: Vec::new(),
    };
    for members in buckets.values() {
        for &(a, b) in members {
            for &(c, d) in members {
                report.quadruples += 1;
                match classify([a, b, c, d]) {
                    Some(label) => *report.case_counts.entry(label.case_number).or_default() += 1,
                    None => report.unclassified.push([a, b, c, d]),
                }
            }
        }
    }
    report.unclassified.sort_unstable();
    report
}

/// Every `(a, b, c, d)` in `[0, index_bound]^4` with `F_a L_b = F_c L_d`,
/// bucketed by value and classified.
pub fn verify_fl_uniqueness(index_bound: u64) -> Result<UniquenessReport> {
    if index_bound < 5 {
        return Err(Error::Domain("uniqueness scans need index_bound >= 5".into()));
    }
    Ok(verify_uniqueness(Proposition::FL, index_bound, |t, a| &t.fib[a], classify_fl))
}

/// Every `(a, b, c, d)` in `[0, index_bound]^4` with `L_a L_b = L_c L_d`.
pub fn verify_ll_uniqueness(index_bound: u64) -> Result<UniquenessReport> {
    if index_bound < 5 {
        return Err(Error::Domain("uniqueness scans need index_bound >= 5".into()));
    }
    Ok(verify_uniqueness(Proposition::LL, index_bound, |t, a| &t.luc[a], classify_ll))
}

/// One sign convention (or the only form) of an identity family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityVariant {
    pub form: String,
    /// Whether this is the form as usually printed (as opposed to an
    /// alternative sign placement tried alongside it).
    pub printed: bool,
    pub checks: u64,
    /// Index tuples where the variant fails.
    pub failures: Vec<Vec<i64>>,
}

impl IdentityVariant {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFamily {
    pub id: String,
    pub description: String,
    pub variants: Vec<IdentityVariant>,
}

impl IdentityFamily {
    /// The first variant that holds over the whole range.
    pub fn working_variant(&self) -> Option<&IdentityVariant> {
        self.variants.iter().find(|v| v.holds())
    }

    pub fn holds(&self) -> bool {
        self.working_variant().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub index_bound: u64,
    pub families: Vec<IdentityFamily>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(IdentityFamily::holds)
    }

    pub fn family(&self, id: &str) -> Option<&IdentityFamily> {
        self.families.iter().find(|f| f.id == id)
    }
}

struct VariantBuilder {
    form: String,
    printed: bool,
    checks: u64,
    failures: Vec<Vec<i64>>,
}

impl VariantBuilder {
    fn new(form: &str, printed: bool) -> Self {
        Self { form: form.to_string(), printed, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, indices: &[i64]) {
        self.checks += 1;
        if !ok {
            self.failures.push(indices.to_vec());
        }
    }

    fn build(self) -> IdentityVariant {
        IdentityVariant { form: self.form, printed: self.printed, checks: self.checks, failures: self.failures }
    }
}

fn family(id: &str, description: &str, variants: Vec<VariantBuilder>) -> IdentityFamily {
    IdentityFamily {
        id: id.to_string(),
        description: description.to_string(),
        variants: variants.into_iter().map(VariantBuilder::build).collect(),
    }
}

fn cumulative(seq: &SequenceDef, count: usize) -> Vec<BigInt> {
    // entry i = S_i; S_0 = 0
    let mut out = vec![BigInt::zero()];
    let mut acc = BigInt::zero();
    for t in seq.iter().skip(1).take(count) {
        acc += t;
        out.push(acc.clone());
    }
    out
}

/// Checks ten Fibonacci, Lucas, Pell and Jacobsthal identity families for
/// every index up to `index_bound`. Identities whose sign placement is
/// ambiguous are checked in both placements; each family reports which one
/// works.
pub fn check_identity_suite(index_bound: u64) -> Result<IdentityReport> {
    if index_bound < 10 {
        return Err(Error::Domain("identity suite needs index_bound >= 10".into()));
    }
    let bound = index_bound as i64;
    let t = FibLucasTable::new(4 * index_bound as usize + 8);
    let (f, l) = (|i: i64| t.f(i), |i: i64| t.l(i));
    let fib_sums = cumulative(&SequenceDef::fibonacci(), 4 * index_bound as usize + 4);
    let pell: Vec<BigInt> = SequenceDef::pell().iter().take(4 * index_bound as usize + 2).collect();
    let pell_sums = cumulative(&SequenceDef::pell(), 4 * index_bound as usize + 1);
    let jac: Vec<BigInt> = SequenceDef::jacobsthal().iter().take(2 * index_bound as usize + 2).collect();
    let jac_sums = cumulative(&SequenceDef::jacobsthal(), 2 * index_bound as usize + 1);
    let mut families = Vec::new();

    let mut v = VariantBuilder::new("F_{2n} = F_n L_n", true);
    for n in 0..=bound {
        v.check(f(2 * n) == f(n) * l(n), &[n]);
    }
    families.push(family("fib-doubling", "doubling", vec![v]));

    let mut v = VariantBuilder::new(
        "F_{2n}+(-1)^n = F_{n-1}L_{n+1}; F_{2n}-(-1)^n = F_{n+1}L_{n-1}; \
         F_{2n+1}+(-1)^n = F_{n+1}L_n; F_{2n+1}-(-1)^n = F_n L_{n+1}",
        true,
    );
    for n in 0..=bound {
        let s = sign(n);
        v.check(f(2 * n) + s == f(n - 1) * l(n + 1), &[n, 1]);
        v.check(f(2 * n) - s == f(n + 1) * l(n - 1), &[n, 2]);
        v.check(f(2 * n + 1) + s == f(n + 1) * l(n), &[n, 3]);
        v.check(f(2 * n + 1) - s == f(n) * l(n + 1), &[n, 4]);
    }
    families.push(family("fib-neighbors", "Fibonacci neighbors factor", vec![v]));

    let mut v = VariantBuilder::new(
        "S_{4k} = F_{2k}L_{2k+2}; S_{4k+2} = F_{2k+3}L_{2k+1}; \
         S_{4k+1} = F_{2k+2}L_{2k+1}; S_{4k+3} = F_{2k+2}L_{2k+3}",
        true,
    );
    for k in 0..=bound {
        let s = |i: i64| &fib_sums[i as usize];
        v.check(*s(4 * k) == f(2 * k) * l(2 * k + 2), &[k, 0]);
        v.check(*s(4 * k + 2) == f(2 * k + 3) * l(2 * k + 1), &[k, 2]);
        v.check(*s(4 * k + 1) == f(2 * k + 2) * l(2 * k + 1), &[k, 1]);
        v.check(*s(4 * k + 3) == f(2 * k + 2) * l(2 * k + 3), &[k, 3]);
    }
    families.push(family("fib-sums", "Fibonacci partial sums as F*L products", vec![v]));

    let mut printed = VariantBuilder::new("F_a L_b = F_{a+b} + (-1)^b F_{a-b}", true);
    let mut alt = VariantBuilder::new("F_a L_b = F_{a+b} + (-1)^a F_{a-b}", false);
    for a in 0..=bound {
        for b in 0..=bound {
            let lhs = f(a) * l(b);
            printed.check(lhs == f(a + b) + sign(b) * f(a - b), &[a, b]);
            alt.check(lhs == f(a + b) + sign(a) * f(a - b), &[a, b]);
        }
    }
    families.push(family("fl-product", "Fibonacci-Lucas product to sum", vec![printed, alt]));

    let mut printed = VariantBuilder::new("L_n L_m = L_{n+m} + (-1)^n L_{n-m}", true);
    let mut alt = VariantBuilder::new("L_n L_m = L_{n+m} + (-1)^m L_{n-m}", false);
    for n in 0..=bound {
        for m in 0..=bound {
            let lhs = l(n) * l(m);
            printed.check(lhs == l(n + m) + sign(n) * l(n - m), &[n, m]);
            alt.check(lhs == l(n + m) + sign(m) * l(n - m), &[n, m]);
        }
    }
    families.push(family("ll-product", "Lucas product to sum", vec![printed, alt]));

    let mut v = VariantBuilder::new("L_{2n} + 3(-1)^n = 5 F_{n+1} F_{n-1}", true);
    for n in 0..=bound {
        v.check(l(2 * n) + 3 * sign(n) == 5 * f(n + 1) * f(n - 1), &[n]);
    }
    families.push(family("lucas-near-square", "Lucas near-square", vec![v]));

    let mut printed = VariantBuilder::new("L_a + (-1)^b L_{2b-a} = L_b L_{a-b}", true);
    let mut alt = VariantBuilder::new("L_a + (-1)^{a-b} L_{2b-a} = L_b L_{a-b}", false);
    for a in 0..=bound {
        for b in 0..=a {
            let rhs = l(b) * l(a - b);
            printed.check(l(a) + sign(b) * l(2 * b - a) == rhs, &[a, b]);
            alt.check(l(a) + sign(a - b) * l(2 * b - a) == rhs, &[a, b]);
        }
    }
    families.push(family("lucas-shift", "Lucas fractional-part shift", vec![printed, alt]));

    let mut v = VariantBuilder::new("S^P_{4k-1} = 2 P_{2k}^2; S^P_{4k} = 2 P_{2k+1} P_{2k}", true);
    for k in 1..=bound as usize {
        v.check(pell_sums[4 * k - 1] == 2 * &pell[2 * k] * &pell[2 * k], &[k as i64, 3]);
        v.check(pell_sums[4 * k] == 2 * &pell[2 * k + 1] * &pell[2 * k], &[k as i64, 0]);
    }
    families.push(family("pell-sums", "Pell partial sums", vec![v]));

    let mut v = VariantBuilder::new("S^J_{2k-1} = J_{2k}; S^J_{2k} = 2 J_{2k}", true);
    for k in 1..=bound as usize {
        v.check(jac_sums[2 * k - 1] == jac[2 * k], &[k as i64, 1]);
        v.check(jac_sums[2 * k] == 2 * &jac[2 * k], &[k as i64, 0]);
    }
    families.push(family("jacobsthal-sums", "Jacobsthal partial sums", vec![v]));

    let mut v = VariantBuilder::new("F_{n+1} < F_{n+2} - 1 < 2 F_{n+1} for n > 2", true);
    for n in 3..=bound {
        let num = f(n + 2) - 1;
        let den = f(n + 1);
        v.check(num > den && num < 2 * &den, &[n]);
    }
    families.push(family("fib-sum-ratio", "S^F_n / F_{n+1} lies strictly between 1 and 2", vec![v]));

    Ok(IdentityReport { index_bound, families })
}

fn rounding_preconditions(family: FibLucas, n: u64, m: u64) -> Result<()> {
    let min_gap = match family {
        FibLucas::Fibonacci => 0,
        FibLucas::Lucas => 1,
    };
    let ok = n + 4 <= 3 * m && n >= 11 && n >= m + min_gap;
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "rounding lemma needs n - 3m <= -4, n >= 11 and n - m >= {min_gap} (got n = {n}, m = {m})"
        )))
    }
}

/// `(numerator, D_m, L_{n-m+2})` for the rounding lemma.
fn rounding_parts(family: FibLucas, n: u64, m: u64) -> (BigInt, BigInt, BigInt) {
    let (num, den) = match family {
        FibLucas::Fibonacci => (term_fast(FibLucas::Fibonacci, n + 2) - 1, term_fast(FibLucas::Fibonacci, m)),
        FibLucas::Lucas => (term_fast(FibLucas::Lucas, n + 2) - 3, term_fast(FibLucas::Lucas, m)),
    };
    (num, den, term_fast(FibLucas::Lucas, n - m + 2))
}

/// `|N - D_m L_{n-m+2}| < D_m`, where `N = F_{n+2} - 1` and `D_m = F_m`
/// (Fibonacci) or `N = L_{n+2} - 3` and `D_m = L_m` (Lucas): the ratio
/// `N / D_m` is within 1 of `L_{n-m+2}`.
pub fn check_rounding_lemma(family: FibLucas, n: u64, m: u64) -> Result<bool> {
    rounding_preconditions(family, n, m)?;
    let (num, den, luc) = rounding_parts(family, n, m);
    let gap: BigInt = num - &den * luc;
    Ok(gap.abs() < den)
}

/// Under the lemma's hypotheses: `None` when `D_m` does not divide `N`,
/// otherwise whether the quotient is exactly `L_{n-m+2}`.
pub fn check_rounding_corollary(family: FibLucas, n: u64, m: u64) -> Result<Option<bool>> {
    rounding_preconditions(family, n, m)?;
    let (num, den, luc) = rounding_parts(family, n, m);
    let (q, r) = num.div_rem(&den);
    Ok(r.is_zero().then(|| q == luc))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundingReport {
    pub family: FibLucas,
    pub n_max: u64,
    pub pairs_checked: u64,
    pub divisible_pairs: u64,
    /// `(n, m)` where the inequality fails.
    pub inequality_failures: Vec<(u64, u64)>,
    /// `(n, m)` where `D_m | N` but the quotient is not `L_{n-m+2}`.
    pub quotient_failures: Vec<(u64, u64)>,
}

impl RoundingReport {
    pub fn passed(&self) -> bool {
        self.inequality_failures.is_empty() && self.quotient_failures.is_empty()
    }
}

/// Every `(n, m)` with `n <= n_max` meeting the lemma's hypotheses.
pub fn verify_rounding(family: FibLucas, n_max: u64) -> RoundingReport {
    let t = FibLucasTable::new(n_max as usize + 2);
    let mut report = RoundingReport {
        family,
        n_max,
        pairs_checked: 0,
        divisible_pairs: 0,
        inequality_failures: Vec::new(),
        quotient_failures: Vec::new(),
    };
    for n in 11..=n_max {
        for m in (n + 4).div_ceil(3)..=n {
            if rounding_preconditions(family, n, m).is_err() {
                continue;
            }
            let (num, den): (BigInt, BigInt) = match family {
                FibLucas::Fibonacci => (t.f(n as i64 + 2) - 1, t.f(m as i64)),
                FibLucas::Lucas => (t.l(n as i64 + 2) - 3, t.l(m as i64)),
            };
            let luc = t.l((n - m + 2) as i64);
            report.pairs_checked += 1;
            let gap: BigInt = &num - &den * &luc;
            if gap.abs() >= den {
                report.inequality_failures.push((n, m));
            }
            let (q, r) = num.div_rem(&den);
            if r.is_zero() {
                report.divisible_pairs += 1;
                if q != luc {
                    report.quotient_failures.push((n, m));
                }
            }
        }
    }
    report
}
