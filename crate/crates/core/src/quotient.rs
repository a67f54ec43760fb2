//! Arithmetic in `Q[t]/(m)`.
//!
//! For a squarefree modulus `h` with roots `α`, an element vanishes at every
//! root simultaneously iff its canonical representative is zero. This is how
//! "vanishes at all points of `B(h)`" is decided without leaving `Q`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::upoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    modulus: UniPoly,
}

impl QuotientRing {
    /// The modulus must have positive degree.
    pub fn new(modulus: UniPoly) -> Result<Self> {
        match modulus.degree() {
            Some(d) if d >= 1 => Ok(Self { modulus }),
            _ => Err(Error::InvalidArgument(
                "quotient modulus must have positive degree",
            )),
        }
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    /// The operator `D_h`: canonical remainder modulo the modulus.
    pub fn reduce(&self, f: &UniPoly) -> QuotElem<'_> {
        QuotElem {
            rep: f.rem(&self.modulus).expect("modulus is nonzero"),
            ring: self,
        }
    }

    pub fn zero(&self) -> QuotElem<'_> {
        QuotElem {
            rep: UniPoly::zero(),
            ring: self,
        }
    }

    pub fn one(&self) -> QuotElem<'_> {
        self.reduce(&UniPoly::one())
    }

    /// The class of `t`.
    pub fn gen(&self) -> QuotElem<'_> {
        self.reduce(&UniPoly::t())
    }
}

/// An element of `Q[t]/(m)`, stored as its remainder modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotElem<'a> {
    rep: UniPoly,
    ring: &'a QuotientRing,
}

impl<'a> QuotElem<'a> {
    pub fn representative(&self) -> &UniPoly {
        &self.rep
    }

    pub fn into_representative(self) -> UniPoly {
        self.rep
    }

    pub fn ring(&self) -> &'a QuotientRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            core::ptr::eq(self.ring, other.ring) || self.ring == other.ring,
            "quotient elements from different rings"
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    ///
    /// When the representative shares a factor with the modulus, that monic
    /// common factor is returned in [`Error::NotInvertible`].
    pub fn inverse(&self) -> Result<Self> {
        if self.rep.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (d, s, _) = UniPoly::ext_gcd(&self.rep, &self.ring.modulus);
        if !d.is_one() {
            return Err(Error::NotInvertible { factor: d });
        }
        Ok(self.ring.reduce(&s))
    }

    /// Monic `gcd(modulus, representative)`. Equals 1 iff the element is
    /// nonzero at every root of the modulus.
    pub fn gcd_with_modulus(&self) -> UniPoly {
        UniPoly::gcd(&self.ring.modulus, &self.rep)
    }
}

impl<'a> Add for &QuotElem<'a> {
    type Output = QuotElem<'a>;
    fn add(self, rhs: &QuotElem<'a>) -> QuotElem<'a> {
        self.check_ring(rhs);
        QuotElem {
            rep: &self.rep + &rhs.rep,
            ring: self.ring,
        }
    }
}

impl<'a> Sub for &QuotElem<'a> {
    type Output = QuotElem<'a>;
    fn sub(self, rhs: &QuotElem<'a>) -> QuotElem<'a> {
        self.check_ring(rhs);
        QuotElem {
            rep: &self.rep - &rhs.rep,
            ring: self.ring,
        }
    }
}

impl<'a> Mul for &QuotElem<'a> {
    type Output = QuotElem<'a>;
    fn mul(self, rhs: &QuotElem<'a>) -> QuotElem<'a> {
        self.check_ring(rhs);
        self.ring.reduce(&(&self.rep * &rhs.rep))
    }
}

impl<'a> Neg for &QuotElem<'a> {
    type Output = QuotElem<'a>;
    fn neg(self) -> QuotElem<'a> {
        QuotElem {
            rep: -&self.rep,
            ring: self.ring,
        }
    }
}

impl fmt::Display for QuotElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn inverse_of_one() {
        let ring = QuotientRing::new(UniPoly::from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(ring.one().inverse().unwrap(), ring.one());
    }

    #[test]
    fn inverse_of_t_mod_t2_minus_2() {
        let ring = QuotientRing::new(UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let inv = ring.gen().inverse().unwrap();
        assert_eq!(inv.representative(), &UniPoly::monomial(ratio(1, 2), 1));
        assert_eq!(&inv * &ring.gen(), ring.one());
    }

    #[test]
    fn zero_divisor_surfaces_factor() {
        let ring = QuotientRing::new(UniPoly::from_ints(&[2, -3, 1])).unwrap();
        let a = ring.reduce(&UniPoly::from_ints(&[-1, 1]));
        assert_eq!(
            a.inverse(),
            Err(Error::NotInvertible {
                factor: UniPoly::from_ints(&[-1, 1])
            })
        );
    }

    #[test]
    fn multiples_of_modulus_vanish() {
        let h = UniPoly::from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0, 1]);
        let ring = QuotientRing::new(h.clone()).unwrap();
        let g = UniPoly::from_ints(&[3, 0, 5, 7]);
        assert!(ring.reduce(&(&h * &g)).is_zero());
        assert_eq!(ring.reduce(&g).representative(), &g);
    }

    #[test]
    fn constant_modulus_rejected() {
        assert!(QuotientRing::new(UniPoly::one()).is_err());
    }
}
