use thiserror::Error;

/// Errors raised by lattice construction, the cohomology engine and the
/// numeric criteria.
///
/// Variants carrying a `&'static str` name the invariant or hypothesis that
/// failed, so callers can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid intersection matrix: {0}")]
    InvalidGram(&'static str),
    #[error("invalid surface model: {0}")]
    InvalidModel(&'static str),
    #[error("self-intersection is odd; the lattice is not even")]
    OddSquare,
    #[error("peeling a (-2)-curve left the effective cone")]
    PeelLeftCone,
    #[error("nef class of square zero is not a multiple of a listed elliptic pencil")]
    NoPencil,
    #[error("nef class has negative square; the model's curve list is incomplete")]
    NefNegativeSquare,
    #[error("class is neither effective nor anti-effective but has positive Euler characteristic")]
    InconsistentCone,
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),
    #[error("maximum genus formula produced a non-integer")]
    NonIntegral,
    #[error("negative input: {0}")]
    NegativeInput(&'static str),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(&'static str),
    #[error("invalid 7-tuple: {0}")]
    InvalidSeptuple(&'static str),
    #[error("zero denominator")]
    ZeroDenominator,
}

pub type Result<T> = core::result::Result<T, Error>;
