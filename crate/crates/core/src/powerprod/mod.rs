//! Power products `x1^a1 x2^a2 … xn^an` and the orderings on them.
//!
//! Three representations implement [`Term`]:
//!
//! * [`ExpandedString`]: the variables written out one per factor and kept
//!   sorted (`x^3 y^2 z` is `"aaabbc"` over `a, b, c`). Operations are merges
//!   over the sequences.
//! * [`ExponentVector`]: one exponent per variable; the reference form that
//!   the other two are tested against.
//! * [`PrimeImage`]: the integer obtained by substituting the i-th prime for
//!   the i-th variable (`x^3 y^2 z ↦ 2^3·3^2·5 = 360`). Multiplication,
//!   division, divisibility, gcd and lcm become single integer operations,
//!   and comparing images is the prime-based ordering.
//!
//! Every representation can be compared under every [`MonomialOrder`]; the
//! cheap pairings are expanded strings with total degree and prime images
//! with the prime-based order.

mod expanded;
mod prime;
mod vector;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;

pub use expanded::ExpandedString;
pub use prime::PrimeImage;
pub use vector::ExponentVector;

use crate::error::Result;

/// Maximum number of variables a [`VarTable`] may hold.
pub const MAX_VARS: usize = 64;

const fn first_primes() -> [u64; MAX_VARS] {
    let mut out = [0u64; MAX_VARS];
    let mut count = 0;
    let mut candidate = 2u64;
    while count < MAX_VARS {
        let mut d = 2;
        let mut is_prime = true;
        while d * d <= candidate {
            if candidate.is_multiple_of(d) {
                is_prime = false;
                break;
            }
            d += 1;
        }
        if is_prime {
            out[count] = candidate;
            count += 1;
        }
        candidate += 1;
    }
    out
}

/// `PRIMES[i]` encodes the variable at position `i` of a [`VarTable`].
pub const PRIMES: [u64; MAX_VARS] = first_primes();

/// Ordered single-letter variable names; position `i` maps to `PRIMES[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<char>,
    /// Names in the order they were first declared, before any permutation.
    declared: Vec<char>,
}

impl VarTable {
    pub fn new(names: impl IntoIterator<Item = char>) -> std::result::Result<Self, String> {
        let names: Vec<char> = names.into_iter().collect();
        if names.len() > MAX_VARS {
            return Err(format!("at most {MAX_VARS} variables are supported"));
        }
        for (i, c) in names.iter().enumerate() {
            if !c.is_ascii_alphabetic() {
                return Err(format!("variable `{c}` is not an ASCII letter"));
            }
            if names[..i].contains(c) {
                return Err(format!("variable `{c}` declared twice"));
            }
        }
        Ok(VarTable {
            declared: names.clone(),
            names,
        })
    }

    /// Parses a compact order string such as `"acb"`.
    pub fn from_order(order: &str) -> std::result::Result<Self, String> {
        Self::new(order.chars().filter(|c| !c.is_whitespace() && *c != ','))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn name(&self, index: usize) -> char {
        self.names[index]
    }

    pub fn index_of(&self, name: char) -> Option<usize> {
        self.names.iter().position(|&c| c == name)
    }

    pub fn prime(&self, index: usize) -> u64 {
        PRIMES[index]
    }

    /// The current order as a string, e.g. `"acb"`.
    pub fn order_string(&self) -> String {
        self.names.iter().collect()
    }

    /// The order the table was originally declared in.
    pub fn declared_order(&self) -> String {
        self.declared.iter().collect()
    }

    /// `result[i]` is the current position of the variable declared at `i`.
    pub fn permutation(&self) -> Vec<usize> {
        self.declared
            .iter()
            .map(|c| {
                self.index_of(*c)
                    .expect("declared names are a permutation of names")
            })
            .collect()
    }

    /// Reorders the variables; `order` must contain exactly the same names.
    pub fn permuted(&self, order: &[char]) -> std::result::Result<Self, String> {
        let mut sorted_new = order.to_vec();
        let mut sorted_old = self.names.clone();
        sorted_new.sort_unstable();
        sorted_old.sort_unstable();
        if sorted_new != sorted_old || order.len() != self.names.len() {
            let order: String = order.iter().collect();
            return Err(format!(
                "`{order}` is not a permutation of `{}`",
                self.order_string()
            ));
        }
        Ok(VarTable {
            names: order.to_vec(),
            declared: self.declared.clone(),
        })
    }
}

/// Admissible orderings on power products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Total degree first; equal degrees compare the expanded forms as plain
    /// strings, the greater string being the greater product. With the first
    /// variable written `a`, `x^2z` ("aac") is below `xy^2` ("abb").
    TotalDegree,
    /// Natural order of prime images.
    PrimeBased,
    /// Pure lexicographic, first variable most significant.
    Lex,
    /// Total degree first; ties broken lexicographically with the first
    /// variable most significant.
    DegLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 4] = [
        MonomialOrder::TotalDegree,
        MonomialOrder::PrimeBased,
        MonomialOrder::Lex,
        MonomialOrder::DegLex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MonomialOrder::TotalDegree => "total-degree",
            MonomialOrder::PrimeBased => "prime",
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
        }
    }

    /// The representation that makes this ordering cheap.
    pub fn native_representation(self) -> Representation {
        match self {
            MonomialOrder::TotalDegree | MonomialOrder::DegLex => Representation::ExpandedString,
            MonomialOrder::PrimeBased => Representation::PrimeImage,
            MonomialOrder::Lex => Representation::ExponentVector,
        }
    }

    /// Compares two exponent vectors of equal length.
    pub fn compare_exponents(self, s: &[u32], t: &[u32]) -> Ordering {
        let degree = |e: &[u32]| e.iter().map(|&x| u64::from(x)).sum::<u64>();
        match self {
            // The first differing factor of two sorted strings belongs to the
            // one with fewer copies of the first differing variable.
            MonomialOrder::TotalDegree => degree(s).cmp(&degree(t)).then_with(|| t.cmp(s)),
            MonomialOrder::DegLex => degree(s).cmp(&degree(t)).then_with(|| s.cmp(t)),
            MonomialOrder::Lex => s.cmp(t),
            MonomialOrder::PrimeBased => compare_images(s, t),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "total-degree" | "totaldegree" | "td" => Ok(MonomialOrder::TotalDegree),
            "deglex" => Ok(MonomialOrder::DegLex),
            "prime" | "prime-based" => Ok(MonomialOrder::PrimeBased),
            "lex" | "plex" => Ok(MonomialOrder::Lex),
            other => Err(format!(
                "unknown ordering `{other}` (expected prime, total-degree, deglex or lex)"
            )),
        }
    }
}

/// Exact prime image of an exponent vector, without a width limit.
pub fn big_image(exponents: &[u32]) -> BigUint {
    exponents
        .iter()
        .zip(PRIMES)
        .fold(BigUint::from(1u32), |acc, (&e, p)| {
            acc * BigUint::from(p).pow(e)
        })
}

/// Prime image in 128 bits when it fits.
fn image_u128(exponents: &[u32]) -> Option<u128> {
    let mut acc: u128 = 1;
    for (&e, p) in exponents.iter().zip(PRIMES) {
        for _ in 0..e {
            acc = acc.checked_mul(u128::from(p))?;
        }
    }
    Some(acc)
}

fn compare_images(s: &[u32], t: &[u32]) -> Ordering {
    match (image_u128(s), image_u128(t)) {
        (Some(a), Some(b)) => a.cmp(&b),
        _ => big_image(s).cmp(&big_image(t)),
    }
}

/// The three interchangeable power-product representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Representation {
    ExpandedString,
    ExponentVector,
    PrimeImage,
}

impl Representation {
    pub const ALL: [Representation; 3] = [
        Representation::ExpandedString,
        Representation::ExponentVector,
        Representation::PrimeImage,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Representation::ExpandedString => "string",
            Representation::ExponentVector => "vector",
            Representation::PrimeImage => "image",
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Representation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "string" | "expanded" => Ok(Representation::ExpandedString),
            "vector" | "exponents" => Ok(Representation::ExponentVector),
            "image" | "prime-image" => Ok(Representation::PrimeImage),
            other => Err(format!(
                "unknown representation `{other}` (expected string, vector or image)"
            )),
        }
    }
}

/// Operations shared by every power-product representation.
///
/// Values of one type are only ever combined when they live over the same
/// [`VarTable`]; the table's size is passed where a representation needs it.
pub trait Term: Clone + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    const REPRESENTATION: Representation;

    /// The empty power product over `nvars` variables.
    fn one(nvars: usize) -> Self;
    fn from_exponents(exponents: &[u32]) -> Result<Self>;
    fn exponents(&self, nvars: usize) -> Vec<u32>;
    fn is_one(&self) -> bool;

    fn mul(&self, other: &Self) -> Result<Self>;
    /// True iff `self` divides `other`.
    fn divides(&self, other: &Self) -> bool;
    /// `self / divisor`; fails with `NotDivisible` unless `divisor` divides `self`.
    fn div(&self, divisor: &Self) -> Result<Self>;
    fn lcm(&self, other: &Self) -> Result<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn total_degree(&self) -> u32;
    fn compare(&self, other: &Self, order: MonomialOrder) -> Ordering;

    /// True when the two share no variable.
    fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_one()
    }
}

/// Prime image of any representation, failing past 64 bits.
pub fn prime_image<T: Term>(t: &T, nvars: usize) -> Result<u64> {
    PrimeImage::from_exponents(&t.exponents(nvars)).map(|p| p.value())
}

/// Converts between representations.
pub fn convert<S: Term, T: Term>(t: &S, nvars: usize) -> Result<T> {
    T::from_exponents(&t.exponents(nvars))
}

/// A power product in a representation chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PowerProduct {
    Expanded(ExpandedString),
    Vector(ExponentVector),
    Image(PrimeImage),
}

impl PowerProduct {
    pub fn representation(&self) -> Representation {
        match self {
            PowerProduct::Expanded(_) => Representation::ExpandedString,
            PowerProduct::Vector(_) => Representation::ExponentVector,
            PowerProduct::Image(_) => Representation::PrimeImage,
        }
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        match self {
            PowerProduct::Expanded(t) => t.exponents(nvars),
            PowerProduct::Vector(t) => t.exponents(nvars),
            PowerProduct::Image(t) => t.exponents(nvars),
        }
    }

    pub fn from_exponents(exponents: &[u32], target: Representation) -> Result<Self> {
        Ok(match target {
            Representation::ExpandedString => {
                PowerProduct::Expanded(ExpandedString::from_exponents(exponents)?)
            }
            Representation::ExponentVector => {
                PowerProduct::Vector(ExponentVector::from_exponents(exponents)?)
            }
            Representation::PrimeImage => {
                PowerProduct::Image(PrimeImage::from_exponents(exponents)?)
            }
        })
    }

    pub fn convert(&self, target: Representation, nvars: usize) -> Result<Self> {
        if self.representation() == target {
            return Ok(self.clone());
        }
        Self::from_exponents(&self.exponents(nvars), target)
    }
}

/// Caret notation: `x^31`, `x^3y^2z`, `1` for the empty product.
pub fn render_exponents(exponents: &[u32], vars: &VarTable) -> String {
    let mut out = String::new();
    for (i, &e) in exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(vars.name(i)),
            _ => {
                out.push(vars.name(i));
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

pub fn render<T: Term>(t: &T, vars: &VarTable) -> String {
    render_exponents(&t.exponents(vars.len()), vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::AlgebraError;

    #[test]
    fn prime_table() {
        assert_eq!(&PRIMES[..10], &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(PRIMES[63], 311);
    }

    #[test]
    fn var_table_rejects_duplicates_and_records_permutation() {
        assert!(VarTable::from_order("aba").is_err());
        let v = VarTable::from_order("abc").unwrap();
        let p = v.permuted(&['a', 'c', 'b']).unwrap();
        assert_eq!(p.order_string(), "acb");
        assert_eq!(p.declared_order(), "abc");
        assert_eq!(p.permutation(), vec![0, 2, 1]);
        assert_eq!(p.prime(p.index_of('c').unwrap()), 3);
        assert!(v.permuted(&['a', 'b']).is_err());
        assert!(v.permuted(&['a', 'b', 'd']).is_err());
    }

    #[test]
    fn render_caret_notation() {
        let v = VarTable::from_order("xyz").unwrap();
        assert_eq!(render_exponents(&[31, 0, 0], &v), "x^31");
        assert_eq!(render_exponents(&[3, 2, 1], &v), "x^3y^2z");
        assert_eq!(render_exponents(&[0, 0, 0], &v), "1");
    }

    #[test]
    fn conversion_chain() {
        let v = VarTable::from_order("abc").unwrap();
        let s = ExpandedString::parse("aaabbc", &v).unwrap();
        let e: ExponentVector = convert(&s, 3).unwrap();
        assert_eq!(e.as_slice(), &[3, 2, 1]);
        let p: PrimeImage = convert(&e, 3).unwrap();
        assert_eq!(p.value(), 360);
        let back: ExpandedString = convert(&p, 3).unwrap();
        assert_eq!(back, s);

        let dynamic = PowerProduct::Expanded(s.clone());
        assert_eq!(
            dynamic.convert(Representation::ExpandedString, 3).unwrap(),
            dynamic
        );
        assert_eq!(
            dynamic.convert(Representation::PrimeImage, 3).unwrap(),
            PowerProduct::Image(PrimeImage::new(360).unwrap())
        );
    }

    #[test]
    fn image_capacity() {
        // x^31 with x on the third prime: 5^31 needs 72 bits.
        assert_eq!(
            PowerProduct::Vector(ExponentVector::from_exponents(&[0, 0, 31]).unwrap())
                .convert(Representation::PrimeImage, 3),
            Err(AlgebraError::ImageOverflow("encoding"))
        );
        assert_eq!(big_image(&[0, 0, 31]).bits(), 72);
        assert_eq!(
            prime_image(&ExponentVector::from_exponents(&[31, 0, 0]).unwrap(), 3),
            Ok(1 << 31)
        );
    }
}
