//! Polynomial-system text format and the built-in benchmark corpus.
//!
//! One polynomial per line, e.g. `-2/7uw^2 + 10/7vw^2 - 20/7w^3 + tu`.
//! Variables are single letters, factors multiply implicitly, exponents
//! follow `^`, coefficients are optional signed integers or fractions and
//! whitespace is ignored. Lines starting with `#` are comments; two comment
//! directives are understood by [`parse_system_file`]:
//!
//! ```text
//! # name: Cyclic 4
//! # vars: xyzt
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::Coeff;
use crate::error::AlgebraError;
use crate::poly::{display_exponent_terms, sort_exponent_terms, Polynomial};
use crate::powerprod::{MonomialOrder, Term, VarTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: variable `{name}` is not declared")]
    UnknownVariable {
        name: char,
        line: usize,
        column: usize,
    },
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid variable order: {0}")]
    InvalidVarOrder(String),
    #[error("system has no polynomials")]
    Empty,
}

/// An exact polynomial with exponent vectors, independent of any ordering or
/// backend. Terms are kept sorted by exponent vector, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawPolynomial {
    terms: Vec<(BigRational, Vec<u32>)>,
}

impl RawPolynomial {
    pub fn new(mut terms: Vec<(BigRational, Vec<u32>)>) -> Self {
        sort_exponent_terms(&mut terms, MonomialOrder::Lex);
        RawPolynomial { terms }
    }

    pub fn terms(&self) -> &[(BigRational, Vec<u32>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_polynomial<T: Term, C: Coeff>(
        &self,
        order: MonomialOrder,
    ) -> Result<Polynomial<T, C>, AlgebraError> {
        Polynomial::from_exponent_terms(self.terms.iter().map(|(c, e)| (c, e.as_slice())), order)
    }

    pub fn from_polynomial<T: Term, C: Coeff>(p: &Polynomial<T, C>, nvars: usize) -> Self {
        Self::new(p.to_exponent_terms(nvars))
    }

    /// Renders with terms in the given ordering.
    pub fn display(&self, vars: &VarTable, order: MonomialOrder) -> String {
        let mut terms = self.terms.clone();
        sort_exponent_terms(&mut terms, order);
        display_exponent_terms(&terms, vars)
    }

    /// Moves exponents so that `new[map[i]] = old[i]`.
    fn remap(&self, map: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(c, e)| {
                let mut out = vec![0; e.len()];
                for (i, &x) in e.iter().enumerate() {
                    out[map[i]] = x;
                }
                (c.clone(), out)
            })
            .collect();
        Self::new(terms)
    }
}

/// A named polynomial system over a declared variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    name: String,
    vars: VarTable,
    polynomials: Vec<RawPolynomial>,
}

impl PolySystem {
    pub fn new(
        name: impl Into<String>,
        vars: VarTable,
        polynomials: Vec<RawPolynomial>,
    ) -> Result<Self, CorpusError> {
        if polynomials.is_empty() {
            return Err(CorpusError::Empty);
        }
        Ok(PolySystem {
            name: name.into(),
            vars,
            polynomials,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn polynomials(&self) -> &[RawPolynomial] {
        &self.polynomials
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// The input polynomials in a concrete representation and backend.
    pub fn to_polynomials<T: Term, C: Coeff>(
        &self,
        order: MonomialOrder,
    ) -> Result<Vec<Polynomial<T, C>>, AlgebraError> {
        self.polynomials
            .iter()
            .map(|p| p.to_polynomial(order))
            .collect()
    }

    /// Re-declares the variables in the order given by `order` (e.g.
    /// `"acb"`), which reassigns primes and reorders exponent vectors.
    pub fn permute_vars(&self, order: &str) -> Result<Self, CorpusError> {
        let names: Vec<char> = order
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .collect();
        let vars = self
            .vars
            .permuted(&names)
            .map_err(CorpusError::InvalidPermutation)?;
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|c| vars.index_of(*c).expect("checked permutation"))
            .collect();
        Ok(PolySystem {
            name: self.name.clone(),
            polynomials: self.polynomials.iter().map(|p| p.remap(&map)).collect(),
            vars,
        })
    }

    /// Text form accepted by [`parse_system_file`].
    pub fn render(&self) -> String {
        let mut out = format!(
            "# name: {}\n# vars: {}\n",
            self.name,
            self.vars.order_string()
        );
        for p in &self.polynomials {
            out.push_str(&p.display(&self.vars, MonomialOrder::TotalDegree));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct LineParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    vars: &'a mut Vec<char>,
    fixed_vars: bool,
}

impl LineParser<'_> {
    fn error(&self, message: impl Into<String>) -> CorpusError {
        CorpusError::Parse {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn variable(&mut self, c: char) -> Result<usize, CorpusError> {
        if let Some(i) = self.vars.iter().position(|&v| v == c) {
            return Ok(i);
        }
        if self.fixed_vars {
            return Err(CorpusError::UnknownVariable {
                name: c,
                line: self.line,
                column: self.pos + 1,
            });
        }
        self.vars.push(c);
        Ok(self.vars.len() - 1)
    }

    /// `[sign] [integer ["/" integer]] factor*`
    fn term(&mut self, mut negative: bool) -> Result<(BigRational, Vec<u32>), CorpusError> {
        while let Some(c @ ('+' | '-')) = self.peek() {
            negative ^= c == '-';
            self.pos += 1;
        }
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut seen = false;
        if let Some(num) = self.digits() {
            seen = true;
            let num: BigInt = num.parse().expect("digits");
            let den = if self.peek() == Some('/') {
                self.pos += 1;
                self.skip_ws();
                let den = self
                    .digits()
                    .ok_or_else(|| self.error("expected denominator"))?;
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                den
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(num, den);
        }
        let mut exponents: Vec<u32> = Vec::new();
        while let Some(c) = self.peek() {
            if !c.is_ascii_alphabetic() {
                break;
            }
            seen = true;
            let index = self.variable(c)?;
            self.pos += 1;
            let mut power = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                let digits = self
                    .digits()
                    .ok_or_else(|| self.error("expected exponent after `^`"))?;
                power = digits
                    .parse()
                    .map_err(|_| self.error("exponent too large"))?;
            }
            if exponents.len() <= index {
                exponents.resize(index + 1, 0);
            }
            exponents[index] = exponents[index]
                .checked_add(power)
                .ok_or_else(|| self.error("exponent too large"))?;
        }
        if !seen {
            return Err(self.error("expected a coefficient or variable"));
        }
        if negative {
            coeff = -coeff;
        }
        Ok((coeff, exponents))
    }

    fn polynomial(&mut self) -> Result<Vec<(BigRational, Vec<u32>)>, CorpusError> {
        let mut terms = vec![self.term(false)?];
        while let Some(c) = self.peek() {
            let negative = match c {
                '+' => false,
                '-' => true,
                _ => return Err(self.error(format!("unexpected `{c}`"))),
            };
            self.pos += 1;
            terms.push(self.term(negative)?);
        }
        Ok(terms)
    }
}

/// Parses one polynomial per non-blank, non-comment line.
///
/// With `var_order`, every variable must be declared there and positions
/// follow it; otherwise variables are numbered by first appearance.
pub fn parse_system(
    name: &str,
    text: &str,
    var_order: Option<&str>,
) -> Result<PolySystem, CorpusError> {
    let mut vars: Vec<char> = match var_order {
        Some(order) => VarTable::from_order(order)
            .map_err(CorpusError::InvalidVarOrder)?
            .names()
            .to_vec(),
        None => Vec::new(),
    };
    let mut parsed: Vec<(usize, Vec<(BigRational, Vec<u32>)>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parser = LineParser {
            chars: line.chars().collect(),
            pos: 0,
            line: i + 1,
            vars: &mut vars,
            fixed_vars: var_order.is_some(),
        };
        parsed.push((i + 1, parser.polynomial()?));
    }
    let nvars = vars.len();
    let mut polynomials = Vec::with_capacity(parsed.len());
    for (line, mut terms) in parsed {
        for (_, e) in terms.iter_mut() {
            e.resize(nvars, 0);
        }
        let p = RawPolynomial::new(terms);
        if p.is_zero() {
            return Err(CorpusError::Parse {
                line,
                column: 1,
                message: "polynomial is identically zero".into(),
            });
        }
        polynomials.push(p);
    }
    let vars = VarTable::new(vars).map_err(CorpusError::InvalidVarOrder)?;
    PolySystem::new(name, vars, polynomials)
}

fn directive<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| {
        let rest = l.trim().strip_prefix('#')?.trim();
        let value = rest.strip_prefix(key)?.trim_start().strip_prefix(':')?;
        Some(value.trim())
    })
}

/// Parses a system file, honouring `# name:` and `# vars:` directives.
/// `var_order` overrides the file's declared order.
pub fn parse_system_file(
    text: &str,
    default_name: &str,
    var_order: Option<&str>,
) -> Result<PolySystem, CorpusError> {
    let name = directive(text, "name").unwrap_or(default_name);
    let order = var_order.or_else(|| directive(text, "vars"));
    parse_system(name, text, order)
}

/// A system shipped with the crate.
#[derive(Debug, Clone, Copy)]
pub struct BuiltinSystem {
    pub key: &'static str,
    pub title: &'static str,
    pub source: &'static str,
}

macro_rules! builtin {
    ($key:literal, $title:literal) => {
        BuiltinSystem {
            key: $key,
            title: $title,
            source: include_str!(concat!("../corpus/", $key, ".txt")),
        }
    };
}

/// The benchmark corpus.
pub const BUILTINS: [BuiltinSystem; 13] = [
    builtin!("example-1", "Example 1"),
    builtin!("example-2", "Example 2"),
    builtin!("example-3", "Example 3"),
    builtin!("cyclic-4", "Cyclic 4"),
    builtin!("cyclic-5", "Cyclic 5"),
    builtin!("gerdt-1", "Gerdt 1"),
    builtin!("gerdt-2", "Gerdt 2"),
    builtin!("gerdt-3", "Gerdt 3"),
    builtin!("arnborg-lazard", "Arnborg-Lazard"),
    builtin!("parametric-curve", "Parametric Curve"),
    builtin!("katsura-4", "Katsura 4"),
    builtin!("arnold-1", "Arnold 1"),
    builtin!("arnold-2", "Arnold 2"),
];

fn normalize(name: &str) -> String {
    name.trim()
        .chars()
        .map(|c| {
            if c == ' ' || c == '_' {
                '-'
            } else {
                c.to_ascii_lowercase()
            }
        })
        .collect()
}

/// Looks up a built-in system by key (`"gerdt-1"`) or title (`"Gerdt 1"`).
pub fn find_builtin(name: &str) -> Option<&'static BuiltinSystem> {
    let key = normalize(name);
    BUILTINS
        .iter()
        .find(|b| b.key == key || normalize(b.title) == key)
}

/// Loads a built-in system with its default variable order.
pub fn builtin(name: &str) -> Result<PolySystem, CorpusError> {
    let b = find_builtin(name).ok_or_else(|| CorpusError::UnknownSystem(name.to_string()))?;
    parse_system_file(b.source, b.title, None)
}
