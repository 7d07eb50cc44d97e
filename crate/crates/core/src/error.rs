use thiserror::Error;

/// Failures raised by coefficient, power-product and polynomial arithmetic,
/// and by the basis engine built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A 64-bit coefficient operation left the signed 64-bit range.
    #[error("coefficient overflow in {0}")]
    CoefficientOverflow(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    /// A prime image no longer fits in 64 bits.
    #[error("prime image overflow in {0}")]
    ImageOverflow(&'static str),
    #[error("power product is not divisible")]
    NotDivisible,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("computation exceeded its time limit")]
    Timeout,
}

impl AlgebraError {
    /// True for the two capacity failures (coefficient or image width).
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            AlgebraError::CoefficientOverflow(_) | AlgebraError::ImageOverflow(_)
        )
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
