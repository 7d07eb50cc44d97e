//! Exact rational coefficients.
//!
//! Two backends implement [`Coeff`]: [`Rat64`], a numerator/denominator pair
//! of signed 64-bit integers whose every intermediate product and sum is
//! checked, and [`BigRat`], backed by arbitrary-precision integers. Both keep
//! values in lowest terms with a positive denominator.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use rug::integer::Order;
use rug::{Integer, Rational};

use crate::error::{AlgebraError, Result};

/// Which coefficient backend a computation runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoeffBackend {
    Fixed64,
    ArbitraryPrecision,
}

impl CoeffBackend {
    pub const ALL: [CoeffBackend; 2] = [CoeffBackend::Fixed64, CoeffBackend::ArbitraryPrecision];

    /// Short name used on the command line and in CSV output.
    pub fn as_str(self) -> &'static str {
        match self {
            CoeffBackend::Fixed64 => "i64",
            CoeffBackend::ArbitraryPrecision => "big",
        }
    }
}

impl fmt::Display for CoeffBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoeffBackend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "i64" | "fixed64" => Ok(CoeffBackend::Fixed64),
            "big" | "arbitrary" | "gmp" => Ok(CoeffBackend::ArbitraryPrecision),
            other => Err(format!(
                "unknown coefficient backend `{other}` (expected i64 or big)"
            )),
        }
    }
}

/// An exact rational coefficient.
///
/// Arithmetic is fallible so that the 64-bit backend can report overflow; the
/// arbitrary-precision backend only fails on division by zero.
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Hash + Send + Sync + 'static
{
    const BACKEND: CoeffBackend;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn div(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Result<Self>;

    fn inv(&self) -> Result<Self> {
        Self::one().div(self)
    }

    fn is_negative(&self) -> bool {
        self.to_big().is_negative()
    }

    /// Imports an exact value, failing if it does not fit the backend.
    fn from_big(value: &BigRational) -> Result<Self>;
    fn to_big(&self) -> BigRational;
}

/// Parses `[sign] digits ["/" digits]`.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator in `{text}`"))?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(format!("signed denominator in `{text}`"));
            }
            d.parse()
                .map_err(|_| format!("invalid denominator in `{text}`"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(BigRational::new(num, den))
}

fn write_ratio(
    f: &mut fmt::Formatter<'_>,
    num: impl fmt::Display,
    den: impl fmt::Display,
    den_is_one: bool,
) -> fmt::Result {
    if den_is_one {
        write!(f, "{num}")
    } else {
        write!(f, "{num}/{den}")
    }
}

/// Rational number with checked signed 64-bit numerator and denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat64 {
    num: i64,
    den: i64,
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

const OVERFLOW_ADD: AlgebraError = AlgebraError::CoefficientOverflow("rational addition");
const OVERFLOW_MUL: AlgebraError = AlgebraError::CoefficientOverflow("rational multiplication");
const OVERFLOW_NEG: AlgebraError = AlgebraError::CoefficientOverflow("rational negation");

impl Rat64 {
    pub const ZERO: Rat64 = Rat64 { num: 0, den: 1 };
    pub const ONE: Rat64 = Rat64 { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        if num == 0 {
            return Ok(Self::ZERO);
        }
        let g = gcd_u64(num.unsigned_abs(), den.unsigned_abs());
        // g divides both, so g <= |den| and the quotients are exact; only
        // i64::MIN / 1 with a negative denominator can overflow below.
        let (mut n, mut d) = if g == 1 << 63 {
            (num.signum(), den.signum())
        } else {
            (num / g as i64, den / g as i64)
        };
        if d < 0 {
            n = n.checked_neg().ok_or(OVERFLOW_NEG)?;
            d = d.checked_neg().ok_or(OVERFLOW_NEG)?;
        }
        Ok(Rat64 { num: n, den: d })
    }

    pub fn from_int(n: i64) -> Self {
        Rat64 { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }
}

impl Coeff for Rat64 {
    const BACKEND: CoeffBackend = CoeffBackend::Fixed64;

    fn zero() -> Self {
        Self::ZERO
    }

    fn one() -> Self {
        Self::ONE
    }

    fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    fn is_negative(&self) -> bool {
        self.num < 0
    }

    fn add(&self, other: &Self) -> Result<Self> {
        if self.num == 0 {
            return Ok(*other);
        }
        if other.num == 0 {
            return Ok(*self);
        }
        // a/b + c/d with g = gcd(b, d): the result's denominator divides
        // (b/g)·d, and any common factor with the numerator divides g.
        let g = gcd_u64(self.den as u64, other.den as u64) as i64;
        if g == 1 {
            let ad = self.num.checked_mul(other.den).ok_or(OVERFLOW_ADD)?;
            let cb = other.num.checked_mul(self.den).ok_or(OVERFLOW_ADD)?;
            let num = ad.checked_add(cb).ok_or(OVERFLOW_ADD)?;
            if num == 0 {
                return Ok(Self::ZERO);
            }
            let den = self.den.checked_mul(other.den).ok_or(OVERFLOW_ADD)?;
            return Ok(Rat64 { num, den });
        }
        let b_g = self.den / g;
        let d_g = other.den / g;
        let t = self
            .num
            .checked_mul(d_g)
            .ok_or(OVERFLOW_ADD)?
            .checked_add(other.num.checked_mul(b_g).ok_or(OVERFLOW_ADD)?)
            .ok_or(OVERFLOW_ADD)?;
        if t == 0 {
            return Ok(Self::ZERO);
        }
        let g2 = gcd_u64(t.unsigned_abs(), g as u64) as i64;
        let num = t / g2;
        let den = b_g.checked_mul(other.den / g2).ok_or(OVERFLOW_ADD)?;
        Ok(Rat64 { num, den })
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        if self.num == 0 || other.num == 0 {
            return Ok(Self::ZERO);
        }
        let g1 = gcd_u64(self.num.unsigned_abs(), other.den as u64) as i64;
        let g2 = gcd_u64(other.num.unsigned_abs(), self.den as u64) as i64;
        let num = (self.num / g1)
            .checked_mul(other.num / g2)
            .ok_or(OVERFLOW_MUL)?;
        let den = (self.den / g2)
            .checked_mul(other.den / g1)
            .ok_or(OVERFLOW_MUL)?;
        Ok(Rat64 { num, den })
    }

    fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    fn inv(&self) -> Result<Self> {
        if self.num == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.num < 0 {
            Ok(Rat64 {
                num: self.den.checked_neg().ok_or(OVERFLOW_NEG)?,
                den: self.num.checked_neg().ok_or(OVERFLOW_NEG)?,
            })
        } else {
            Ok(Rat64 {
                num: self.den,
                den: self.num,
            })
        }
    }

    fn neg(&self) -> Result<Self> {
        Ok(Rat64 {
            num: self.num.checked_neg().ok_or(OVERFLOW_NEG)?,
            den: self.den,
        })
    }

    fn from_big(value: &BigRational) -> Result<Self> {
        let overflow = AlgebraError::CoefficientOverflow("coefficient import");
        let num = value.numer().to_i64().ok_or(overflow.clone())?;
        let den = value.denom().to_i64().ok_or(overflow)?;
        Rat64::new(num, den)
    }

    fn to_big(&self) -> BigRational {
        BigRational::new_raw(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl fmt::Display for Rat64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, self.num, self.den, self.den == 1)
    }
}

impl FromStr for Rat64 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let big = parse_rational(s)?;
        Rat64::from_big(&big).map_err(|e| e.to_string())
    }
}

/// Arbitrary-precision rational on GMP.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigRat(Rational);

impl BigRat {
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self> {
        let den = den.into();
        if den == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(BigRat(Rational::from((num.into(), den))))
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }
}

impl From<Rational> for BigRat {
    fn from(value: Rational) -> Self {
        BigRat(value)
    }
}

fn integer_from_big(n: &BigInt) -> Integer {
    let (sign, digits) = n.to_u32_digits();
    let magnitude = Integer::from_digits(&digits, Order::Lsf);
    if sign == Sign::Minus {
        -magnitude
    } else {
        magnitude
    }
}

fn integer_to_big(n: &Integer) -> BigInt {
    let sign = match n.cmp0() {
        std::cmp::Ordering::Less => Sign::Minus,
        std::cmp::Ordering::Equal => Sign::NoSign,
        std::cmp::Ordering::Greater => Sign::Plus,
    };
    BigInt::from_biguint(sign, BigUint::new(n.to_digits::<u32>(Order::Lsf)))
}

impl Coeff for BigRat {
    const BACKEND: CoeffBackend = CoeffBackend::ArbitraryPrecision;

    fn zero() -> Self {
        BigRat(Rational::new())
    }

    fn one() -> Self {
        BigRat(Rational::from(1))
    }

    fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn is_negative(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Less
    }

    fn add(&self, other: &Self) -> Result<Self> {
        Ok(BigRat(Rational::from(&self.0 + &other.0)))
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(BigRat(Rational::from(&self.0 - &other.0)))
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(BigRat(Rational::from(&self.0 * &other.0)))
    }

    fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(BigRat(Rational::from(&self.0 / &other.0)))
    }

    fn neg(&self) -> Result<Self> {
        Ok(BigRat(Rational::from(-&self.0)))
    }

    fn from_big(value: &BigRational) -> Result<Self> {
        let (num, den) = (
            integer_from_big(value.numer()),
            integer_from_big(value.denom()),
        );
        Ok(BigRat(Rational::from((num, den))))
    }

    fn to_big(&self) -> BigRational {
        BigRational::new_raw(
            integer_to_big(self.0.numer()),
            integer_to_big(self.0.denom()),
        )
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, self.0.numer(), self.0.denom(), *self.0.denom() == 1)
    }
}

impl FromStr for BigRat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_rational(s).and_then(|r| BigRat::from_big(&r).map_err(|e| e.to_string()))
    }
}

/// Renders a `BigRational` in the same `p/q` form as the backends.
pub fn format_big(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rat64 {
        Rat64::new(n, d).unwrap()
    }

    fn b(n: i64, d: i64) -> BigRat {
        BigRat::new(n, d).unwrap()
    }

    #[test]
    fn small_fraction_arithmetic() {
        assert_eq!(r(1, 2).add(&r(1, 3)).unwrap(), r(5, 6));
        assert_eq!(r(2, 3).mul(&r(3, 4)).unwrap(), r(1, 2));
        assert_eq!(r(1, 2).div(&r(1, 2)).unwrap(), Rat64::ONE);
        assert_eq!(r(5, 6).div(&r(1, 3)).unwrap(), r(5, 2));
        assert_eq!(b(1, 2).add(&b(1, 3)).unwrap(), b(5, 6));
        assert_eq!(b(5, 6).div(&b(1, 3)).unwrap(), b(5, 2));
    }

    #[test]
    fn identities() {
        let x = r(-7, 9);
        assert_eq!(x.add(&Rat64::ZERO).unwrap(), x);
        assert_eq!(x.mul(&Rat64::ONE).unwrap(), x);
        assert_eq!(x.neg().unwrap().neg().unwrap(), x);
        assert_eq!(r(1, 2).neg().unwrap(), r(-1, 2));
        assert!(Rat64::new(0, 1).unwrap().is_zero());
        assert!(BigRat::new(0, 5).unwrap().is_zero());
    }

    #[test]
    fn fixed64_overflow_is_reported() {
        let big = Rat64::from_int(1 << 62);
        assert!(matches!(
            big.add(&big),
            Err(AlgebraError::CoefficientOverflow(_))
        ));
        // 3037000500² = 9223372037000250000 > 2^63 - 1 = 9223372036854775807
        let root = Rat64::from_int(3_037_000_500);
        assert!(matches!(
            root.mul(&root),
            Err(AlgebraError::CoefficientOverflow(_))
        ));
        let below = Rat64::from_int(3_037_000_499);
        assert_eq!(
            below.mul(&below).unwrap(),
            Rat64::from_int(9_223_372_030_926_249_001)
        );
        assert!(matches!(
            Rat64::from_int(i64::MIN).neg(),
            Err(AlgebraError::CoefficientOverflow(_))
        ));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(r(3, 4).div(&Rat64::ZERO), Err(AlgebraError::DivisionByZero));
        assert_eq!(
            b(3, 4).div(&BigRat::zero()),
            Err(AlgebraError::DivisionByZero)
        );
        assert_eq!(Rat64::new(1, 0), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn negative_divisor_moves_sign_to_numerator() {
        let q = r(1, 3).div(&r(-2, 5)).unwrap();
        assert_eq!((q.numer(), q.denom()), (-5, 6));
        let q = r(-1, 3).div(&r(-2, 5)).unwrap();
        assert_eq!((q.numer(), q.denom()), (5, 6));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!("-2/7".parse::<Rat64>().unwrap(), r(-2, 7));
        assert_eq!("+10/4".parse::<BigRat>().unwrap(), b(5, 2));
        assert_eq!(r(6, 3).to_string(), "2");
        assert_eq!(r(-6, 4).to_string(), "-3/2");
        assert_eq!(b(9, -12).to_string(), "-3/4");
        assert!("1/0".parse::<Rat64>().is_err());
        assert!("x".parse::<Rat64>().is_err());
        assert!("1/-2".parse::<Rat64>().is_err());
        assert!("99999999999999999999".parse::<Rat64>().is_err());
    }

    fn canonical(x: &Rat64) -> bool {
        x.den > 0 && gcd_u64(x.num.unsigned_abs(), x.den as u64) == 1 && (x.num != 0 || x.den == 1)
    }

    fn small() -> impl Strategy<Value = (i64, i64)> {
        (-50i64..50, 1i64..30)
    }

    #[derive(Debug, Clone)]
    enum Expr {
        Leaf(i64, i64),
        Add(Box<Expr>, Box<Expr>),
        Sub(Box<Expr>, Box<Expr>),
        Mul(Box<Expr>, Box<Expr>),
        Div(Box<Expr>, Box<Expr>),
    }

    fn expr() -> impl Strategy<Value = Expr> {
        let leaf = (-2_000_000_000i64..2_000_000_000, 1i64..2_000_000_000)
            .prop_map(|(n, d)| Expr::Leaf(n, d));
        leaf.prop_recursive(5, 32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            ]
        })
    }

    fn eval<C: Coeff>(e: &Expr) -> Result<C> {
        Ok(match e {
            Expr::Leaf(n, d) => C::from_big(&BigRational::new((*n).into(), (*d).into()))?,
            Expr::Add(a, b) => eval::<C>(a)?.add(&eval::<C>(b)?)?,
            Expr::Sub(a, b) => eval::<C>(a)?.sub(&eval::<C>(b)?)?,
            Expr::Mul(a, b) => eval::<C>(a)?.mul(&eval::<C>(b)?)?,
            Expr::Div(a, b) => eval::<C>(a)?.div(&eval::<C>(b)?)?,
        })
    }

    proptest! {
        #[test]
        fn field_laws(a in small(), b in small(), c in small()) {
            let (a, b, c) = (r(a.0, a.1), r(b.0, b.1), r(c.0, c.1));
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.add(&a.neg().unwrap()).unwrap().is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            }
            for x in [a.add(&b).unwrap(), a.sub(&c).unwrap(), a.mul(&c).unwrap()] {
                prop_assert!(canonical(&x));
            }
        }

        #[test]
        fn backends_agree_and_overflow_is_never_silent(e in expr()) {
            let fixed = eval::<Rat64>(&e);
            let big = eval::<BigRat>(&e);
            match (&fixed, &big) {
                (Ok(f), Ok(b)) => {
                    prop_assert_eq!(f.to_big(), b.to_big());
                    prop_assert!(canonical(f));
                }
                // An intermediate product may leave the range even when the
                // exact result fits; what matters is that no wrong value is
                // ever returned.
                (Err(AlgebraError::CoefficientOverflow(_)), Ok(_)) => {}
                (Err(AlgebraError::DivisionByZero), Err(AlgebraError::DivisionByZero)) => {}
                (Err(AlgebraError::CoefficientOverflow(_)), Err(AlgebraError::DivisionByZero)) => {}
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }
}
