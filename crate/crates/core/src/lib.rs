//! Reduced Gröbner bases by Buchberger's improved algorithm, with
//! interchangeable power-product representations (expanded strings,
//! exponent vectors, prime images) and coefficient backends (checked 64-bit
//! rationals, arbitrary-precision rationals).
//!
//! ```
//! use primebasis::{builtin, run, RunConfig, MonomialOrder, CoeffBackend};
//!
//! let system = builtin("cyclic-4").unwrap();
//! let config = RunConfig::new(MonomialOrder::PrimeBased, CoeffBackend::ArbitraryPrecision);
//! let out = run(&system, &config, true).unwrap();
//! assert_eq!(out.basis.len(), 7);
//! assert!(out.verification.unwrap().passed());
//! ```

pub mod buchberger;
pub mod coeff;
pub mod corpus;
pub mod error;
pub mod poly;
pub mod powerprod;
mod session;
pub mod verify;

pub use buchberger::{compute_groebner, groebner_basis, EngineOptions, GroebnerResult, PairStats};
pub use coeff::{BigRat, Coeff, CoeffBackend, Rat64};
pub use corpus::{
    builtin, parse_system, parse_system_file, CorpusError, PolySystem, RawPolynomial, BUILTINS,
};
pub use error::AlgebraError;
pub use poly::{Monomial, Polynomial};
pub use powerprod::{
    ExpandedString, ExponentVector, MonomialOrder, PowerProduct, PrimeImage, Representation, Term,
    VarTable,
};
pub use session::{run, RunConfig, RunOutput};
pub use verify::VerifyReport;
