use std::cmp::Ordering;

use num_integer::Integer;

use super::{MonomialOrder, Representation, Term, PRIMES};
use crate::error::{AlgebraError, Result};

const OVERFLOW: AlgebraError = AlgebraError::ImageOverflow("encoding");

/// A power product encoded as its prime image `∏ PRIMES[i]^e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeImage(u64);

impl PrimeImage {
    /// Wraps an image; every factor must be one of the tabled primes.
    pub fn new(value: u64) -> Option<Self> {
        (value >= 1 && factor(value).is_some()).then_some(PrimeImage(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

/// Exponents of `n` over the tabled primes, trimmed after the last nonzero
/// entry. `None` if `n` has a factor outside the table.
fn factor(mut n: u64) -> Option<Vec<u32>> {
    let mut out = Vec::new();
    for &p in PRIMES.iter() {
        if n == 1 {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        out.push(e);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    (n == 1).then_some(out)
}

fn padded(mut v: Vec<u32>, len: usize) -> Vec<u32> {
    v.resize(len, 0);
    v
}

impl Term for PrimeImage {
    const REPRESENTATION: Representation = Representation::PrimeImage;

    fn one(_nvars: usize) -> Self {
        PrimeImage(1)
    }

    fn from_exponents(exponents: &[u32]) -> Result<Self> {
        let mut acc: u64 = 1;
        for (&e, &p) in exponents.iter().zip(PRIMES.iter()) {
            if e > 0 {
                let power = p.checked_pow(e).ok_or(OVERFLOW)?;
                acc = acc.checked_mul(power).ok_or(OVERFLOW)?;
            }
        }
        Ok(PrimeImage(acc))
    }

    fn exponents(&self, nvars: usize) -> Vec<u32> {
        let mut n = self.0;
        let mut out = Vec::with_capacity(nvars);
        for &p in &PRIMES[..nvars] {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push(e);
        }
        debug_assert_eq!(
            n, 1,
            "image {} has factors beyond {nvars} variables",
            self.0
        );
        out
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.0
            .checked_mul(other.0)
            .map(PrimeImage)
            .ok_or(AlgebraError::ImageOverflow("multiplication"))
    }

    fn divides(&self, other: &Self) -> bool {
        other.0.is_multiple_of(self.0)
    }

    fn div(&self, divisor: &Self) -> Result<Self> {
        if !self.0.is_multiple_of(divisor.0) {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(PrimeImage(self.0 / divisor.0))
    }

    fn lcm(&self, other: &Self) -> Result<Self> {
        (self.0 / self.0.gcd(&other.0))
            .checked_mul(other.0)
            .map(PrimeImage)
            .ok_or(AlgebraError::ImageOverflow("lcm"))
    }

    fn gcd(&self, other: &Self) -> Self {
        PrimeImage(self.0.gcd(&other.0))
    }

    fn total_degree(&self) -> u32 {
        factor(self.0).map_or(0, |v| v.iter().sum())
    }

    fn compare(&self, other: &Self, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::PrimeBased => self.0.cmp(&other.0),
            _ => {
                let a = factor(self.0).unwrap_or_default();
                let b = factor(other.0).unwrap_or_default();
                let len = a.len().max(b.len());
                order.compare_exponents(&padded(a, len), &padded(b, len))
            }
        }
    }

    fn is_coprime(&self, other: &Self) -> bool {
        self.0.gcd(&other.0) == 1
    }
}
