//! Validated input octics.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::SeedError;
use crate::quotient::QuotientRing;
use crate::scalar::Scalar;
use crate::upoly::UniPoly;

/// A normalized octic `h(t) = t⁸ + h₆t⁶ + … + h₀`.
///
/// Monic, no `t⁷` term (roots sum to zero), `h₀ ≠ 0` and squarefree.
/// Irreducibility is not required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedPoly {
    ring: QuotientRing,
}

impl SeedPoly {
    /// Validates nine coefficients given constant term first.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, SeedError> {
        if coeffs.len() != 9 {
            return Err(SeedError::WrongCoefficientCount(coeffs.len()));
        }
        let h = UniPoly::new(coeffs);
        match h.degree() {
            Some(8) => {}
            other => return Err(SeedError::WrongDegree(other.unwrap_or(0))),
        }
        if !h.coeff(8).is_one() {
            return Err(SeedError::NotMonic);
        }
        if !h.coeff(7).is_zero() {
            return Err(SeedError::NonzeroT7);
        }
        if h.coeff(0).is_zero() {
            return Err(SeedError::ZeroConstantTerm);
        }
        let g = UniPoly::gcd(&h, &h.derivative());
        if !g.is_constant() {
            return Err(SeedError::NotSquarefree(g));
        }
        Ok(Self {
            ring: QuotientRing::new(h).expect("degree 8"),
        })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, SeedError> {
        Self::new(coeffs.iter().map(|&c| crate::scalar::int(c)).collect())
    }

    pub fn poly(&self) -> &UniPoly {
        self.ring.modulus()
    }

    /// `Q[t]/(h)`, in which every check "at all points of `B(h)`" is done.
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// `h₀`.
    pub fn constant_term(&self) -> Scalar {
        self.poly().coeff(0)
    }

    /// Ascending coefficient list.
    pub fn coefficients(&self) -> Vec<Scalar> {
        (0..=8).map(|i| self.poly().coeff(i)).collect()
    }
}

impl fmt::Display for SeedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}
