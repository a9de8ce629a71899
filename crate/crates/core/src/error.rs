use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a prime: {0}")]
    NotPrime(BigInt),
    #[error("cannot factor zero")]
    FactorZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: transformation of degree {transformation} applied to equation of degree {equation}")]
    DegreeMismatch { transformation: u8, equation: u8 },
    #[error("malformed {0}")]
    Malformed(String),
    #[error("singular equation")]
    Singular,
    #[error("not integral at p = {0}")]
    NotIntegral(BigInt),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("inconsistent (type, c_p): ({kodaira}, {cp})")]
    InconsistentFiber { kodaira: String, cp: u32 },
    #[error("not tabulated: ({kodaira}, c_p = {cp})")]
    NotTabulated { kodaira: String, cp: u32 },
    #[error("psi = {0} is not fixed by Galois")]
    PsiNotFixed(String),
    #[error("psi = {0} is not an element of the component group")]
    PsiNotInGroup(String),
    #[error("degree {0} is outside 2..=4")]
    UnsupportedDegree(u8),
    #[error("residue characteristic out of scope: additive reduction at p = {p} with n = {n}")]
    ResidueCharacteristic { p: BigInt, n: u8 },
    #[error("zero determinant")]
    ZeroDeterminant,
    #[error("matrix entries are not coprime")]
    NotPrimitive,
    #[error("target matrix modulo {0} does not have determinant 1")]
    NotUnimodular(BigInt),
    #[error("moduli are not distinct primes")]
    RepeatedPrime,
    #[error("internal: {0}")]
    Internal(String),
}

impl Error {
    /// Name of the module that raised the error, used in CLI error objects.
    pub fn origin(&self) -> &'static str {
        match self {
            Error::NotPrime(_) | Error::FactorZero => "arith",
            Error::Parse(_) | Error::DegreeMismatch { .. } | Error::Malformed(_) | Error::Singular => {
                "equations"
            }
            Error::NotIntegral(_) | Error::NotOnCurve | Error::Internal(_) => "localred",
            Error::InconsistentFiber { .. } => "fiberdata",
            Error::NotTabulated { .. }
            | Error::PsiNotFixed(_)
            | Error::PsiNotInGroup(_)
            | Error::UnsupportedDegree(_)
            | Error::ResidueCharacteristic { .. } => "counting",
            Error::ZeroDeterminant
            | Error::NotPrimitive
            | Error::NotUnimodular(_)
            | Error::RepeatedPrime => "global",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
