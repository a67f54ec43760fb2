use core::fmt;

use crate::upoly::UniPoly;

/// Reasons a coefficient list is not a normalized octic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedError {
    /// Expected nine coefficients (constant term first).
    WrongCoefficientCount(usize),
    /// The `t⁸` coefficient is zero, so the degree is below eight.
    WrongDegree(usize),
    NotMonic,
    /// Roots do not sum to zero.
    NonzeroT7,
    ZeroConstantTerm,
    /// `gcd(h, h')` is nonconstant; carries the gcd.
    NotSquarefree(UniPoly),
}

impl fmt::Display for SeedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedError::WrongCoefficientCount(n) => {
                write!(f, "expected 9 coefficients (ascending), got {n}")
            }
            SeedError::WrongDegree(d) => write!(f, "polynomial has degree {d}, expected 8"),
            SeedError::NotMonic => f.write_str("polynomial is not monic"),
            SeedError::NonzeroT7 => f.write_str("coefficient of t^7 must be zero"),
            SeedError::ZeroConstantTerm => f.write_str("constant term must be nonzero"),
            SeedError::NotSquarefree(g) => {
                write!(f, "polynomial is not squarefree: gcd(h, h') = {g}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidArgument(&'static str),
    DivisionByZero,
    /// An element sharing the nontrivial factor `factor` with the modulus.
    NotInvertible {
        factor: UniPoly,
    },
    Seed(SeedError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::DivisionByZero => f.write_str("division by the zero polynomial"),
            Error::NotInvertible { factor } => {
                write!(
                    f,
                    "element is not invertible: shares factor {factor} with the modulus"
                )
            }
            Error::Seed(e) => write!(f, "invalid seed: {e}"),
        }
    }
}

impl core::error::Error for Error {}
impl core::error::Error for SeedError {}

impl From<SeedError> for Error {
    fn from(e: SeedError) -> Self {
        Error::Seed(e)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
