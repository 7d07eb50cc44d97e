//! Sparse polynomials kept as monomial lists sorted descending under a
//! [`MonomialOrder`].

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coeff::{format_big, Coeff};
use crate::error::{AlgebraError, Result};
use crate::powerprod::{render, render_exponents, MonomialOrder, Term, VarTable};

/// A coefficient paired with a power product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial<T, C> {
    pub coeff: C,
    pub pp: T,
}

impl<T, C> Monomial<T, C> {
    pub fn new(coeff: C, pp: T) -> Self {
        Monomial { coeff, pp }
    }
}

/// Polynomial with nonzero coefficients in strictly descending term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T, C> {
    terms: Vec<Monomial<T, C>>,
    order: MonomialOrder,
}

/// `out ← a + q·m·b` for term sequences sorted in the same direction.
///
/// `descending` gives the direction of both inputs; `m = None` means 1.
fn axpy<T: Term, C: Coeff>(
    out: &mut Vec<Monomial<T, C>>,
    a: impl Iterator<Item = Monomial<T, C>>,
    q: &C,
    m: Option<&T>,
    b: impl Iterator<Item = Monomial<T, C>>,
    order: MonomialOrder,
    descending: bool,
) -> Result<()> {
    let mut a = a.peekable();
    for bt in b {
        let pp = match m {
            Some(m) => m.mul(&bt.pp)?,
            None => bt.pp,
        };
        let c = if q.is_one() {
            bt.coeff
        } else {
            q.mul(&bt.coeff)?
        };
        loop {
            let Some(at) = a.peek() else {
                out.push(Monomial::new(c, pp));
                break;
            };
            let ord = at.pp.compare(&pp, order);
            let a_first = if descending {
                ord == Ordering::Greater
            } else {
                ord == Ordering::Less
            };
            if a_first {
                out.push(a.next().expect("peeked"));
                continue;
            }
            if ord == Ordering::Equal {
                let at = a.next().expect("peeked");
                let sum = at.coeff.add(&c)?;
                if !sum.is_zero() {
                    out.push(Monomial::new(sum, pp));
                }
            } else {
                out.push(Monomial::new(c, pp));
            }
            break;
        }
    }
    out.extend(a);
    Ok(())
}

impl<T: Term, C: Coeff> Polynomial<T, C> {
    pub fn zero(order: MonomialOrder) -> Self {
        Polynomial {
            terms: Vec::new(),
            order,
        }
    }

    /// Builds a polynomial from terms in any order, combining repeated power
    /// products and dropping zero coefficients.
    pub fn from_terms(
        terms: impl IntoIterator<Item = Monomial<T, C>>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let mut terms: Vec<Monomial<T, C>> =
            terms.into_iter().filter(|m| !m.coeff.is_zero()).collect();
        terms.sort_by(|a, b| b.pp.compare(&a.pp, order));
        let mut merged: Vec<Monomial<T, C>> = Vec::with_capacity(terms.len());
        for m in terms {
            match merged.last_mut() {
                Some(last) if last.pp == m.pp => {
                    last.coeff = last.coeff.add(&m.coeff)?;
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push(m),
            }
        }
        Ok(Polynomial {
            terms: merged,
            order,
        })
    }

    /// Imports exact coefficients and exponent vectors.
    pub fn from_exponent_terms<'a>(
        terms: impl IntoIterator<Item = (&'a BigRational, &'a [u32])>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let terms = terms
            .into_iter()
            .map(|(c, e)| Ok(Monomial::new(C::from_big(c)?, T::from_exponents(e)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(terms, order)
    }

    pub fn constant(c: C, nvars: usize, order: MonomialOrder) -> Self {
        Self::from_terms([Monomial::new(c, T::one(nvars))], order).expect("single term")
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Monomial<T, C>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Result<&Monomial<T, C>> {
        self.terms.first().ok_or(AlgebraError::ZeroPolynomial)
    }

    /// Leading power product. Panics on the zero polynomial.
    pub fn lpp(&self) -> &T {
        &self.terms[0].pp
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lc(&self) -> &C {
        &self.terms[0].coeff
    }

    /// True when terms are strictly descending with no zero coefficient.
    pub fn is_well_formed(&self) -> bool {
        self.terms.iter().all(|m| !m.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| w[0].pp.compare(&w[1].pp, self.order) == Ordering::Greater)
    }

    fn same_order(&self, other: &Self) {
        debug_assert_eq!(
            self.order, other.order,
            "polynomials under different orderings"
        );
    }

    fn combine(&self, q: &C, m: Option<&T>, other: &Self) -> Result<Self> {
        self.same_order(other);
        let mut out = Vec::with_capacity(self.len() + other.len());
        axpy(
            &mut out,
            self.terms.iter().cloned(),
            q,
            m,
            other.terms.iter().cloned(),
            self.order,
            true,
        )?;
        Ok(Polynomial {
            terms: out,
            order: self.order,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(&C::one(), None, other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(&C::one().neg()?, None, other)
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(&C::one().neg()?)
    }

    pub fn scale(&self, c: &C) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let terms = self
            .terms
            .iter()
            .map(|m| Ok(Monomial::new(m.coeff.mul(c)?, m.pp.clone())))
            .collect::<Result<_>>()?;
        Ok(Polynomial {
            terms,
            order: self.order,
        })
    }

    pub fn mul_monomial(&self, m: &Monomial<T, C>) -> Result<Self> {
        if m.coeff.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Monomial::new(t.coeff.mul(&m.coeff)?, t.pp.mul(&m.pp)?)))
            .collect::<Result<_>>()?;
        Ok(Polynomial {
            terms,
            order: self.order,
        })
    }

    /// Scales so the leading coefficient is 1.
    pub fn make_monic(&self) -> Result<Self> {
        let lc = self.leading_monomial()?.coeff.clone();
        if lc.is_one() {
            return Ok(self.clone());
        }
        self.scale(&lc.inv()?)
    }

    /// `(L/lm(f))·f − (L/lm(g))·g` with `L = lcm(lpp(f), lpp(g))`; the
    /// leading terms cancel and are never formed.
    pub fn s_polynomial(&self, other: &Self) -> Result<Self> {
        self.same_order(other);
        let (f, g) = (self, other);
        let (lf, lg) = (f.leading_monomial()?, g.leading_monomial()?);
        let lcm = lf.pp.lcm(&lg.pp)?;
        let mf = lcm.div(&lf.pp)?;
        let mg = lcm.div(&lg.pp)?;
        let qf = lf.coeff.inv()?;
        let qg = lg.coeff.inv()?.neg()?;

        let mut left = Vec::with_capacity(f.len());
        axpy(
            &mut left,
            std::iter::empty(),
            &qf,
            Some(&mf),
            f.terms[1..].iter().cloned(),
            f.order,
            true,
        )?;
        let mut out = Vec::with_capacity(f.len() + g.len());
        axpy(
            &mut out,
            left.into_iter(),
            &qg,
            Some(&mg),
            g.terms[1..].iter().cloned(),
            f.order,
            true,
        )?;
        Ok(Polynomial {
            terms: out,
            order: f.order,
        })
    }

    /// Fully reduces `self` modulo `divisors`.
    pub fn normal_form(&self, divisors: &[&Self]) -> Result<Self> {
        self.normal_form_with(divisors, &mut || Ok(()))
    }

    /// [`normal_form`](Self::normal_form) with a hook called after every
    /// reduction step; an error from the hook aborts the reduction.
    ///
    /// The highest reducible term is always eliminated next, using the first
    /// divisor in list order whose leading power product divides it.
    pub fn normal_form_with(
        &self,
        divisors: &[&Self],
        step: &mut dyn FnMut() -> Result<()>,
    ) -> Result<Self> {
        for d in divisors {
            self.same_order(d);
            if d.is_zero() {
                return Err(AlgebraError::ZeroPolynomial);
            }
        }
        // Working polynomial in ascending order, so the current leading
        // term is popped off the end.
        let mut work: Vec<Monomial<T, C>> = self.terms.iter().rev().cloned().collect();
        let mut scratch: Vec<Monomial<T, C>> = Vec::new();
        let mut remainder = Vec::new();
        while let Some(lead) = work.pop() {
            let Some(divisor) = divisors.iter().find(|d| d.lpp().divides(&lead.pp)) else {
                remainder.push(lead);
                continue;
            };
            let multiplier = lead.pp.div(divisor.lpp())?;
            let q = if divisor.lc().is_one() {
                lead.coeff.neg()?
            } else {
                lead.coeff.div(divisor.lc())?.neg()?
            };
            scratch.clear();
            axpy(
                &mut scratch,
                work.drain(..),
                &q,
                Some(&multiplier),
                divisor.terms[1..].iter().rev().cloned(),
                self.order,
                false,
            )?;
            std::mem::swap(&mut work, &mut scratch);
            step()?;
        }
        Ok(Polynomial {
            terms: remainder,
            order: self.order,
        })
    }

    /// Exact coefficients with exponent vectors, in term order.
    pub fn to_exponent_terms(&self, nvars: usize) -> Vec<(BigRational, Vec<u32>)> {
        self.terms
            .iter()
            .map(|m| (m.coeff.to_big(), m.pp.exponents(nvars)))
            .collect()
    }

    /// The same polynomial under another representation, coefficient type
    /// or ordering.
    pub fn convert<U: Term, D: Coeff>(
        &self,
        nvars: usize,
        order: MonomialOrder,
    ) -> Result<Polynomial<U, D>> {
        let terms = self.to_exponent_terms(nvars);
        Polynomial::from_exponent_terms(terms.iter().map(|(c, e)| (c, e.as_slice())), order)
    }

    /// Renders with caret notation, e.g. `x^2 - 1/2xy + 3`.
    pub fn display(&self, vars: &VarTable) -> String {
        render_terms(self.terms.iter().map(|m| {
            (
                m.coeff.is_negative(),
                m.coeff.to_string(),
                render(&m.pp, vars),
            )
        }))
    }
}

fn render_terms(terms: impl Iterator<Item = (bool, String, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, coeff, pp)) in terms.enumerate() {
        let magnitude = coeff.trim_start_matches('-');
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if pp == "1" {
            out.push_str(magnitude);
        } else {
            if magnitude != "1" {
                out.push_str(magnitude);
            }
            out.push_str(&pp);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders exact terms given in the desired order.
pub fn display_exponent_terms(terms: &[(BigRational, Vec<u32>)], vars: &VarTable) -> String {
    render_terms(
        terms
            .iter()
            .map(|(c, e)| (c.is_negative(), format_big(c), render_exponents(e, vars))),
    )
}

/// Sorts exact terms descending under `order`, merging duplicates.
pub fn sort_exponent_terms(terms: &mut Vec<(BigRational, Vec<u32>)>, order: MonomialOrder) {
    terms.sort_by(|a, b| order.compare_exponents(&b.1, &a.1));
    let mut merged: Vec<(BigRational, Vec<u32>)> = Vec::with_capacity(terms.len());
    for (c, e) in terms.drain(..) {
        match merged.last_mut() {
            Some(last) if last.1 == e => last.0 += c,
            _ => merged.push((c, e)),
        }
    }
    merged.retain(|(c, _)| !c.is_zero());
    *terms = merged;
}

/// One polynomial per line.
pub fn display_lines<T: Term, C: Coeff>(polys: &[Polynomial<T, C>], vars: &VarTable) -> String {
    let mut out = String::new();
    for p in polys {
        let _ = writeln!(out, "{}", p.display(vars));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{BigRat, Rat64};
    use crate::powerprod::{ExpandedString, ExponentVector, PrimeImage};

    type P = Polynomial<ExponentVector, Rat64>;

    fn poly<T: Term, C: Coeff>(
        terms: &[(i64, i64, &[u32])],
        order: MonomialOrder,
    ) -> Polynomial<T, C> {
        let big: Vec<(BigRational, Vec<u32>)> = terms
            .iter()
            .map(|(n, d, e)| (BigRational::new((*n).into(), (*d).into()), e.to_vec()))
            .collect();
        Polynomial::from_exponent_terms(big.iter().map(|(c, e)| (c, e.as_slice())), order).unwrap()
    }

    const DEGLEX: MonomialOrder = MonomialOrder::DegLex;

    #[test]
    fn leading_monomial() {
        let v = VarTable::from_order("a").unwrap();
        let f: P = poly(&[(1, 1, &[2]), (4, 1, &[1]), (3, 1, &[0])], DEGLEX);
        assert_eq!(f.leading_monomial().unwrap().pp.as_slice(), &[2]);
        assert_eq!(f.display(&v), "a^2 + 4a + 3");
        let single: P = poly(&[(5, 1, &[1])], DEGLEX);
        assert_eq!(single.leading_monomial().unwrap(), &single.terms()[0]);
        // x^3 + y^2: y^2 leads under prime order (9 > 8).
        let g: Polynomial<PrimeImage, Rat64> = poly(
            &[(1, 1, &[3, 0]), (1, 1, &[0, 2])],
            MonomialOrder::PrimeBased,
        );
        assert_eq!(g.lpp().value(), 9);
        assert_eq!(
            P::zero(DEGLEX).leading_monomial(),
            Err(AlgebraError::ZeroPolynomial)
        );
    }

    #[test]
    fn arithmetic_cancels() {
        let v = VarTable::from_order("xy").unwrap();
        let a: P = poly(&[(1, 1, &[1, 0]), (1, 1, &[0, 1])], DEGLEX);
        let b: P = poly(&[(1, 1, &[1, 0]), (-1, 1, &[0, 1])], DEGLEX);
        assert_eq!(a.add(&b).unwrap().display(&v), "2x");
        assert_eq!(a.add(&P::zero(DEGLEX)).unwrap(), a);
        assert!(a.sub(&a).unwrap().is_zero());
        let x1: P = poly(&[(1, 1, &[1, 0]), (1, 1, &[0, 0])], DEGLEX);
        let m = Monomial::new(
            Rat64::from_int(2),
            ExponentVector::from_exponents(&[0, 1]).unwrap(),
        );
        assert_eq!(x1.mul_monomial(&m).unwrap().display(&v), "2xy + 2y");
        assert!(a.scale(&Rat64::ZERO).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_examples() {
        let v = VarTable::from_order("xy").unwrap();
        let f: P = poly(&[(1, 1, &[2, 0]), (-1, 1, &[0, 0])], DEGLEX);
        let g: P = poly(&[(1, 1, &[1, 1]), (-1, 1, &[0, 0])], DEGLEX);
        // y·f − x·g = x − y
        assert_eq!(f.s_polynomial(&g).unwrap().display(&v), "x - y");
        assert!(f.s_polynomial(&f).unwrap().is_zero());
        // Non-monic inputs are divided by their leading coefficients.
        let f2 = f.scale(&Rat64::from_int(3)).unwrap();
        assert_eq!(f2.s_polynomial(&g).unwrap().display(&v), "x - y");
    }

    #[test]
    fn normal_form_examples() {
        let v = VarTable::from_order("x").unwrap();
        let f: P = poly(&[(1, 1, &[2]), (4, 1, &[1]), (3, 1, &[0])], DEGLEX);
        let x3: P = poly(&[(1, 1, &[3])], DEGLEX);
        // x^3 = (x − 4)(x^2 + 4x + 3) + 13x + 12
        assert_eq!(x3.normal_form(&[&f]).unwrap().display(&v), "13x + 12");
        assert!(P::zero(DEGLEX).normal_form(&[&f]).unwrap().is_zero());
        let irreducible: P = poly(&[(7, 2, &[1]), (1, 1, &[0])], DEGLEX);
        assert_eq!(irreducible.normal_form(&[&f]).unwrap(), irreducible);
    }

    #[test]
    fn tail_terms_are_reduced() {
        let v = VarTable::from_order("xy").unwrap();
        let p: P = poly(&[(1, 1, &[3, 0]), (1, 1, &[0, 2])], DEGLEX);
        let y: P = poly(&[(1, 1, &[0, 1]), (-1, 1, &[0, 0])], DEGLEX);
        assert_eq!(p.normal_form(&[&y]).unwrap().display(&v), "x^3 + 1");
    }

    #[test]
    fn make_monic() {
        let v = VarTable::from_order("x").unwrap();
        let f: P = poly(&[(2, 1, &[1]), (4, 1, &[0])], DEGLEX);
        assert_eq!(f.make_monic().unwrap().display(&v), "x + 2");
        let monic = f.make_monic().unwrap();
        assert_eq!(monic.make_monic().unwrap(), monic);
        // yw − 1/2 zw + tw over y, w, z, t with deglex: yw leads.
        let vars = VarTable::from_order("ywzt").unwrap();
        let g: Polynomial<ExpandedString, BigRat> = poly(
            &[
                (1, 1, &[1, 1, 0, 0]),
                (-1, 2, &[0, 1, 1, 0]),
                (1, 1, &[0, 1, 0, 1]),
            ],
            DEGLEX,
        );
        let m = g
            .scale(&BigRat::new(-3, 1).unwrap())
            .unwrap()
            .make_monic()
            .unwrap();
        assert!(m.lc().is_one());
        assert_eq!(m.display(&vars), "yw - 1/2wz + wt");
    }

    #[test]
    fn fixed64_overflow_propagates() {
        let big = Rat64::from_int(1 << 62);
        let f: P = Polynomial::from_terms(
            [Monomial::new(
                big,
                ExponentVector::from_exponents(&[1]).unwrap(),
            )],
            DEGLEX,
        )
        .unwrap();
        assert!(matches!(
            f.add(&f),
            Err(AlgebraError::CoefficientOverflow(_))
        ));
    }
}
