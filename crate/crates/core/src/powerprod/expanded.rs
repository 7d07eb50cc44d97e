use std::cmp::Ordering;

use super::{compare_images, MonomialOrder, Representation, Term, VarTable};
use crate::error::{AlgebraError, Result};

/// A power product written out factor by factor: `x^3 y^2 z` over `x, y, z`
/// is the sequence `x x x y y z`.
///
/// Each byte is a variable's position in the table, and the sequence is kept
/// sorted, so the total degree is the length and products are merges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpandedString(Box<[u8]>);

impl ExpandedString {
    /// Reads the names of `text` against `vars`, e.g. `"aaabbc"`.
    pub fn parse(text: &str, vars: &VarTable) -> std::result::Result<Self, String> {
        let mut bytes = text
            .chars()
            .map(|c| {
                vars.index_of(c)
                    .map(|i| i as u8)
                    .ok_or_else(|| format!("unknown variable `{c}`"))
            })
            .collect::<std::result::Result<Vec<u8>, String>>()?;
        bytes.sort_unstable();
        Ok(ExpandedString(bytes.into_boxed_slice()))
    }

    /// The expanded form with variable names, e.g. `"aaabbc"`.
    pub fn to_text(&self, vars: &VarTable) -> String {
        self.0.iter().map(|&i| vars.name(i as usize)).collect()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn counts(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0u32; len];
        for &b in self.0.iter() {
            out[b as usize] += 1;
        }
        out
    }

    fn width(&self) -> usize {
        self.0.last().map_or(0, |&b| b as usize + 1)
    }
}

impl Term for ExpandedString {
    const REPRESENTATION: Representation = Representation::ExpandedString;

    fn one(_nvars: usize) -> Self {
        ExpandedString(Box::new([]))
    }

    fn from_exponents(exponents: &[u32]) -> Result<Self> {
        let mut out = Vec::with_capacity(exponents.iter().sum::<u32>() as usize);
        for (i, &e) in exponents.iter().enumerate() {
            out.extend(std::iter::repeat_n(i as u8, e as usize));
        }
        Ok(ExpandedString(out.into_boxed_slice()))
    }

    fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.counts(nvars)
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(ExpandedString(out.into_boxed_slice()))
    }

    fn divides(&self, other: &Self) -> bool {
        let (a, b) = (&self.0, &other.0);
        if a.len() > b.len() {
            return false;
        }
        // a must be a sub-multiset of b: walk b, consuming a in order.
        let mut i = 0;
        for &c in b.iter() {
            if i == a.len() {
                return true;
            }
            match a[i].cmp(&c) {
                Ordering::Equal => i += 1,
                Ordering::Less => return false,
                Ordering::Greater => {}
            }
        }
        i == a.len()
    }

    fn div(&self, divisor: &Self) -> Result<Self> {
        let (a, b) = (&self.0, &divisor.0);
        let mut out = Vec::with_capacity(a.len().saturating_sub(b.len()));
        let mut j = 0;
        for &c in a.iter() {
            if j < b.len() && b[j] == c {
                j += 1;
            } else if j < b.len() && b[j] < c {
                return Err(AlgebraError::NotDivisible);
            } else {
                out.push(c);
            }
        }
        if j != b.len() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(ExpandedString(out.into_boxed_slice()))
    }

    fn lcm(&self, other: &Self) -> Result<Self> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len().max(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(ExpandedString(out.into_boxed_slice()))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
            }
        }
        ExpandedString(out.into_boxed_slice())
    }

    fn total_degree(&self) -> u32 {
        self.0.len() as u32
    }

    fn compare(&self, other: &Self, order: MonomialOrder) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        match order {
            MonomialOrder::TotalDegree => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            // At the first differing factor, the sequence holding the smaller
            // variable has more of it (and the same count of every earlier
            // one), so it is the lexicographically larger product.
            MonomialOrder::DegLex => a.len().cmp(&b.len()).then_with(|| b.cmp(a)),
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b.iter()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                a.len().cmp(&b.len())
            }
            MonomialOrder::PrimeBased => {
                let width = self.width().max(other.width());
                compare_images(&self.counts(width), &other.counts(width))
            }
        }
    }

    fn is_coprime(&self, other: &Self) -> bool {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Equal => return false,
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
            }
        }
        true
    }
}
