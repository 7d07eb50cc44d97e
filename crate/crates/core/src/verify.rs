//! Checks a claimed reduced Gröbner basis using nothing but polynomial
//! arithmetic: no criteria, no pair bookkeeping.
//!
//! * Gröbner: every pairwise S-polynomial has normal form 0.
//! * Reduced: every member is monic and equal to its own normal form modulo
//!   the other members.
//! * Ideal preservation: every input polynomial has normal form 0 modulo the
//!   basis.

use std::fmt;

use rayon::prelude::*;

use crate::coeff::Coeff;
use crate::error::Result;
use crate::poly::Polynomial;
use crate::powerprod::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    Groebner,
    Reduced,
    IdealPreserved,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Groebner => "groebner",
            Condition::Reduced => "reduced",
            Condition::IdealPreserved => "ideal",
        })
    }
}

/// What failed a condition: a pair of basis members, one basis member, or
/// one input polynomial (indices into the respective lists).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    Pair(usize, usize),
    Member(usize),
    Input(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(i, j) => write!(f, "pair ({i}, {j})"),
            Witness::Member(i) => write!(f, "basis member {i}"),
            Witness::Input(i) => write!(f, "input polynomial {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Failure {
    pub condition: Condition,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub groebner_ok: bool,
    pub reduced_ok: bool,
    pub ideal_ok: bool,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        writeln!(f, "groebner condition: {}", mark(self.groebner_ok))?;
        writeln!(f, "reduced condition:  {}", mark(self.reduced_ok))?;
        writeln!(f, "ideal preserved:    {}", mark(self.ideal_ok))?;
        for failure in &self.failures {
            writeln!(f, "  {} fails at {}", failure.condition, failure.witness)?;
        }
        Ok(())
    }
}

/// Pairs `(i, j)`, `i < j`, whose S-polynomial does not reduce to zero.
pub fn check_groebner<T: Term, C: Coeff>(
    basis: &[Polynomial<T, C>],
) -> Result<Vec<(usize, usize)>> {
    let refs: Vec<&Polynomial<T, C>> = basis.iter().collect();
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    let verdicts: Vec<Result<Option<(usize, usize)>>> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let s = basis[i].s_polynomial(&basis[j])?;
            Ok((!s.normal_form(&refs)?.is_zero()).then_some((i, j)))
        })
        .collect();
    verdicts.into_iter().filter_map(Result::transpose).collect()
}

/// Members that are not monic or are changed by reduction modulo the others.
pub fn check_reduced<T: Term, C: Coeff>(basis: &[Polynomial<T, C>]) -> Result<Vec<usize>> {
    let verdicts: Vec<Result<Option<usize>>> = (0..basis.len())
        .into_par_iter()
        .map(|i| {
            let f = &basis[i];
            if f.is_zero() || !f.lc().is_one() {
                return Ok(Some(i));
            }
            let others: Vec<&Polynomial<T, C>> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g)
                .collect();
            Ok((f.normal_form(&others)? != *f).then_some(i))
        })
        .collect();
    verdicts.into_iter().filter_map(Result::transpose).collect()
}

/// Input polynomials that do not reduce to zero modulo the basis.
pub fn check_ideal_preserved<T: Term, C: Coeff>(
    input: &[Polynomial<T, C>],
    basis: &[Polynomial<T, C>],
) -> Result<Vec<usize>> {
    let refs: Vec<&Polynomial<T, C>> = basis.iter().collect();
    let verdicts: Vec<Result<Option<usize>>> = (0..input.len())
        .into_par_iter()
        .map(|i| Ok((!input[i].normal_form(&refs)?.is_zero()).then_some(i)))
        .collect();
    verdicts.into_iter().filter_map(Result::transpose).collect()
}

/// Runs all three checks.
pub fn verify<T: Term, C: Coeff>(
    input: &[Polynomial<T, C>],
    basis: &[Polynomial<T, C>],
) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let pairs = check_groebner(basis)?;
    let members = check_reduced(basis)?;
    let inputs = check_ideal_preserved(input, basis)?;
    let report_flags = (pairs.is_empty(), members.is_empty(), inputs.is_empty());
    failures.extend(pairs.into_iter().map(|(i, j)| Failure {
        condition: Condition::Groebner,
        witness: Witness::Pair(i, j),
    }));
    failures.extend(members.into_iter().map(|i| Failure {
        condition: Condition::Reduced,
        witness: Witness::Member(i),
    }));
    failures.extend(inputs.into_iter().map(|i| Failure {
        condition: Condition::IdealPreserved,
        witness: Witness::Input(i),
    }));
    Ok(VerifyReport {
        groebner_ok: report_flags.0,
        reduced_ok: report_flags.1,
        ideal_ok: report_flags.2,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BigRat;
    use crate::corpus::parse_system;
    use crate::powerprod::{ExponentVector, MonomialOrder};

    type P = Polynomial<ExponentVector, BigRat>;

    fn polys(text: &str, vars: &str) -> Vec<P> {
        parse_system("t", text, Some(vars))
            .unwrap()
            .to_polynomials(MonomialOrder::DegLex)
            .unwrap()
    }

    #[test]
    fn groebner_condition() {
        assert!(check_groebner(&polys("x^2 - 1", "xy")).unwrap().is_empty());
        // S(x^2 − 1, xy − 1) = x − y is irreducible
        assert_eq!(
            check_groebner(&polys("x^2 - 1\nxy - 1", "xy")).unwrap(),
            vec![(0, 1)]
        );
        assert!(check_groebner(&polys("x - y\ny^2 - 1", "xy"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn reduced_condition() {
        assert!(check_reduced(&polys("x", "x")).unwrap().is_empty());
        // x reduces to −1 modulo x + 1 and vice versa
        assert_eq!(check_reduced(&polys("x\nx + 1", "x")).unwrap(), vec![0, 1]);
        assert_eq!(check_reduced(&polys("2x", "x")).unwrap(), vec![0]);
    }

    #[test]
    fn ideal_condition() {
        let input = polys("x^2 - 1\nxy - 1", "xy");
        assert!(check_ideal_preserved(&input, &input).unwrap().is_empty());
        assert!(
            check_ideal_preserved(&input, &polys("x - y\ny^2 - 1", "xy"))
                .unwrap()
                .is_empty()
        );
        assert_eq!(
            check_ideal_preserved(&polys("y", "xy"), &polys("x", "xy")).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn report_flags_follow_failures() {
        let input = polys("x^2 - 1\nxy - 1", "xy");
        let report = verify(&input, &input).unwrap();
        assert!(!report.groebner_ok && report.reduced_ok && report.ideal_ok);
        assert_eq!(report.failures.len(), 1);
        assert!(!report.passed());
        let good = verify(&input, &polys("x - y\ny^2 - 1", "xy")).unwrap();
        assert!(good.passed() && good.groebner_ok && good.reduced_ok && good.ideal_ok);
    }
}
