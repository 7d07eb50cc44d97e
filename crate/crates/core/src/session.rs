//! Run-time selection of ordering, representation and backend.

use std::time::Duration;

use crate::buchberger::{compute_groebner, EngineOptions, PairStats};
use crate::coeff::{BigRat, Coeff, CoeffBackend, Rat64};
use crate::corpus::{PolySystem, RawPolynomial};
use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::powerprod::{
    ExpandedString, ExponentVector, MonomialOrder, PrimeImage, Representation, Term,
};
use crate::verify::{verify, VerifyReport};

/// One of the implementation variants.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub ordering: MonomialOrder,
    pub representation: Representation,
    pub backend: CoeffBackend,
    pub options: EngineOptions,
}

impl RunConfig {
    /// Uses the representation native to `ordering`: expanded strings for
    /// total degree, prime images for the prime-based order and exponent
    /// vectors for lex.
    pub fn new(ordering: MonomialOrder, backend: CoeffBackend) -> Self {
        RunConfig {
            ordering,
            representation: ordering.native_representation(),
            backend,
            options: EngineOptions::default(),
        }
    }

    pub fn with_representation(mut self, representation: Representation) -> Self {
        self.representation = representation;
        self
    }

    pub fn with_options(mut self, options: EngineOptions) -> Self {
        self.options = options;
        self
    }
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    /// The reduced basis, ascending by leading power product.
    pub basis: Vec<RawPolynomial>,
    /// The basis rendered one polynomial per entry, terms descending.
    pub rendered: Vec<String>,
    pub stats: PairStats,
    pub duration: Duration,
    pub verification: Option<VerifyReport>,
}

fn run_typed<T: Term, C: Coeff>(
    system: &PolySystem,
    config: &RunConfig,
    check: bool,
) -> Result<RunOutput, AlgebraError> {
    let nvars = system.vars().len();
    let result = compute_groebner::<T, C>(system, config.ordering, config.options)?;
    let verification = if check {
        // Verification runs on exact coefficients whatever the backend.
        let input: Vec<Polynomial<T, BigRat>> = system.to_polynomials(config.ordering)?;
        let basis = result
            .basis
            .iter()
            .map(|p| p.convert::<T, BigRat>(nvars, config.ordering))
            .collect::<Result<Vec<_>, _>>()?;
        Some(verify(&input, &basis)?)
    } else {
        None
    };
    Ok(RunOutput {
        rendered: result
            .basis
            .iter()
            .map(|p| p.display(system.vars()))
            .collect(),
        basis: result
            .basis
            .iter()
            .map(|p| RawPolynomial::from_polynomial(p, nvars))
            .collect(),
        stats: result.stats,
        duration: result.duration,
        verification,
    })
}

/// Computes (and optionally verifies) the reduced basis of `system` with the
/// variant described by `config`.
pub fn run(
    system: &PolySystem,
    config: &RunConfig,
    check: bool,
) -> Result<RunOutput, AlgebraError> {
    use CoeffBackend as B;
    use Representation as R;
    match (config.representation, config.backend) {
        (R::ExpandedString, B::Fixed64) => {
            run_typed::<ExpandedString, Rat64>(system, config, check)
        }
        (R::ExpandedString, B::ArbitraryPrecision) => {
            run_typed::<ExpandedString, BigRat>(system, config, check)
        }
        (R::ExponentVector, B::Fixed64) => {
            run_typed::<ExponentVector, Rat64>(system, config, check)
        }
        (R::ExponentVector, B::ArbitraryPrecision) => {
            run_typed::<ExponentVector, BigRat>(system, config, check)
        }
        (R::PrimeImage, B::Fixed64) => run_typed::<PrimeImage, Rat64>(system, config, check),
        (R::PrimeImage, B::ArbitraryPrecision) => {
            run_typed::<PrimeImage, BigRat>(system, config, check)
        }
    }
}
