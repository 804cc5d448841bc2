use alloc::string::String;

/// Errors raised by the exact-arithmetic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is reducible over the base field")]
    ReduciblePolynomial,
    #[error("branch is ramified: 2*q0 vanishes modulo p")]
    RamifiedBranch,
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("f is a square modulo p; the point is not inert")]
    NotInert,
    #[error("no admissible shift found below the search cap")]
    Degenerate,
    #[error("group action is not transitive")]
    NotTransitive,
    #[error("group order exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("curve polynomial is not squarefree")]
    NotSquarefree,
    #[error("curve polynomial must have degree at least 5")]
    DegreeTooSmall,
    #[error("even-degree model has a non-square leading coefficient")]
    IrrationalInfinitePlaces,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("function is constant")]
    ConstantFunction,
    #[error("unsupported divisor shape: {0}")]
    UnsupportedDivisorShape(String),
    #[error("divisor is not in the linear series")]
    NotInLinearSeries,
    #[error("operation needs an affine point, got a place at infinity")]
    InfinitePlace,
    #[error("field is not primitive")]
    NotPrimitive,
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
