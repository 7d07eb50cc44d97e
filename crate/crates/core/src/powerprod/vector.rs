use std::cmp::Ordering;

use super::{MonomialOrder, Representation, Term};
use crate::error::{AlgebraError, Result};

/// One exponent per variable, in variable-table order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Box<[u32]>);

impl ExponentVector {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl Term for ExponentVector {
    const REPRESENTATION: Representation = Representation::ExponentVector;

    fn one(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars].into_boxed_slice())
    }

    fn from_exponents(exponents: &[u32]) -> Result<Self> {
        Ok(ExponentVector(exponents.into()))
    }

    fn exponents(&self, nvars: usize) -> Vec<u32> {
        debug_assert_eq!(self.0.len(), nvars);
        self.0.to_vec()
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self.zip_with(other, |a, b| a + b))
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, divisor: &Self) -> Result<Self> {
        if !divisor.divides(self) {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(self.zip_with(divisor, |a, b| a - b))
    }

    fn lcm(&self, other: &Self) -> Result<Self> {
        Ok(self.zip_with(other, u32::max))
    }

    fn gcd(&self, other: &Self) -> Self {
        self.zip_with(other, u32::min)
    }

    fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn compare(&self, other: &Self, order: MonomialOrder) -> Ordering {
        order.compare_exponents(&self.0, &other.0)
    }

    fn is_coprime(&self, other: &Self) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}
