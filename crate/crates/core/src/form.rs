//! Integer linear forms over the symbolic initial values of a recurrence.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::Integer;

/// Coefficient vector of a term (or a sum of terms) over the symbolic initial
/// values `a, b, c, ...` of a recurrence.
///
/// Entry `j` multiplies the `j`-th initial value, so the seventh term of a
/// Fibonacci-like sequence is `[5, 8]`, i.e. `5a + 8b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(with = "crate::serde_int::vec")]
    coeffs: Vec<Integer>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Integer>) -> Self {
        Self { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); len] }
    }

    /// The form selecting the `j`-th initial value (0-based).
    pub fn unit(len: usize, j: usize) -> Self {
        let mut f = Self::zero(len);
        f.coeffs[j] = BigInt::one();
        f
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Value of the form at concrete initial values.
    ///
    /// Panics if `values` does not have one entry per coefficient.
    pub fn evaluate(&self, values: &[Integer]) -> Integer {
        assert_eq!(values.len(), self.coeffs.len(), "one value per coefficient");
        self.coeffs.iter().zip(values).map(|(c, v)| c * v).sum()
    }

    /// Returns the integer `z` with `self == z * other`, if one exists.
    ///
    /// `other` must be nonzero; a zero `other` never yields a multiplier.
    pub fn multiple_of(&self, other: &LinearForm) -> Option<Integer> {
        assert_eq!(self.len(), other.len(), "forms of different orders");
        let (pivot, pivot_coeff) = other.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())?;
        let (z, rem) = self.coeffs[pivot].div_rem(pivot_coeff);
        if !rem.is_zero() {
            return None;
        }
        self.coeffs.iter().zip(&other.coeffs).all(|(s, o)| *s == &z * o).then_some(z)
    }
}

impl Add<&LinearForm> for &LinearForm {
    type Output = LinearForm;

    fn add(self, rhs: &LinearForm) -> LinearForm {
        assert_eq!(self.len(), rhs.len(), "forms of different orders");
        LinearForm::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl AddAssign<&LinearForm> for LinearForm {
    fn add_assign(&mut self, rhs: &LinearForm) {
        assert_eq!(self.len(), rhs.len(), "forms of different orders");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Mul<&LinearForm> for &Integer {
    type Output = LinearForm;

    fn mul(self, rhs: &LinearForm) -> LinearForm {
        rhs.scale(self)
    }
}

fn symbol(j: usize, len: usize) -> String {
    if len <= 26 {
        char::from(b'a' + j as u8).to_string()
    } else {
        format!("a{}", j + 1)
    }
}

/// Renders as `5a+8b`, skipping zero coefficients (`0` for the zero form).
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&symbol(j, self.coeffs.len()))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_table_notation() {
        assert_eq!(LinearForm::from_i64s(&[55, 88]).to_string(), "55a+88b");
        assert_eq!(LinearForm::from_i64s(&[5, 7, 8]).to_string(), "5a+7b+8c");
        assert_eq!(LinearForm::from_i64s(&[1, -1]).to_string(), "a-b");
        assert_eq!(LinearForm::from_i64s(&[0, 0]).to_string(), "0");
    }

    #[test]
    fn multiple_requires_single_integer_factor() {
        let sum = LinearForm::from_i64s(&[55, 88]);
        let term = LinearForm::from_i64s(&[5, 8]);
        assert_eq!(sum.multiple_of(&term), Some(BigInt::from(11)));
        assert_eq!(term.multiple_of(&sum), None);
        // 3a+4b is not proportional to a+b even though 4 divides nothing here
        assert_eq!(LinearForm::from_i64s(&[3, 4]).multiple_of(&LinearForm::from_i64s(&[1, 1])), None);
        assert_eq!(LinearForm::from_i64s(&[2, 3]).multiple_of(&LinearForm::zero(2)), None);
        assert_eq!(LinearForm::zero(2).multiple_of(&term), Some(BigInt::zero()));
    }

    #[test]
    fn evaluate_is_dot_product() {
        let f = LinearForm::from_i64s(&[55, 88]);
        assert_eq!(f.evaluate(&[BigInt::from(1), BigInt::from(1)]), BigInt::from(143));
    }
}
