use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("series constant term must be 1")]
    ConstantTermNotOne,
    #[error("series constant term must be 0")]
    NonzeroConstantTerm,
    #[error("quotient is not a polynomial (nonzero remainder)")]
    NotAPolynomial,
    #[error("cannot parse Coxeter type {0:?}")]
    Parse(String),
    #[error("Coxeter type out of range: {0}")]
    Range(String),
    #[error("profile {profile} does not apply to {ty}")]
    ProfileMismatch { profile: String, ty: String },
    #[error("beta is not a free parameter for {0}")]
    BetaNotArbitrary(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degree {0} is not supported by the closed form")]
    UnsupportedDegree(usize),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("{ty} is not of the family required by {check}")]
    WrongFamily { ty: String, check: &'static str },
}
