//! Sparse polynomials in `x, y, z` over `Q`.
//!
//! Bivariate polynomials in `x, y` are stored with a zero `z` exponent.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quotient::{QuotElem, QuotientRing};
use crate::scalar::{self, Scalar};
use crate::upoly::UniPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

/// Exponent triple `(i, j, k)` of `x^i y^j z^k`, ordered graded-lexicographically
/// with `x > y > z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial([i, j, k])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, var: Var) -> u32 {
        self.0[var.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// All monomials of total degree `d`, in descending grlex order.
    pub fn of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                out.push(Monomial([i, j, d - i - j]));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `x, y, z`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::term(Scalar::one(), Monomial(e))
    }

    /// Repeated monomials are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_int_terms(terms: &[([u32; 3], i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (Monomial(e), scalar::int(c))))
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in ascending grlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Terms in descending grlex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: Var) -> Self {
        let idx = var.index();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.0[idx] -= 1;
            out.add_term(n, c * scalar::int(i64::from(e)));
        }
        out
    }

    /// Mixed partial `∂^{a+b+c} / ∂x^a ∂y^b ∂z^c`.
    pub fn partial(&self, orders: [u32; 3]) -> Self {
        let mut out = self.clone();
        for (var, &n) in Var::ALL.iter().zip(orders.iter()) {
            for _ in 0..n {
                out = out.derivative(*var);
            }
        }
        out
    }

    /// `z^d · P(x/z, y/z)` for a polynomial `P` in `x, y`.
    pub fn homogenize(&self, d: u32) -> Result<Self> {
        if self.terms.keys().any(|m| m.0[2] != 0) {
            return Err(Error::InvalidArgument(
                "homogenize expects a polynomial in x, y only",
            ));
        }
        if self.total_degree().is_some_and(|deg| deg > d) {
            return Err(Error::InvalidArgument(
                "homogenization degree is below the total degree",
            ));
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial([m.0[0], m.0[1], d - m.degree()]), c.clone()))
                .collect(),
        })
    }

    /// `P(x, y, 1)`.
    pub fn dehomogenize(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial([m.0[0], m.0[1], 0]), c.clone())),
        )
    }

    pub fn eval(&self, point: &[Scalar; 3]) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, (m, c)| {
            acc + c
                * scalar::pow(&point[0], m.0[0] as usize)
                * scalar::pow(&point[1], m.0[1] as usize)
                * scalar::pow(&point[2], m.0[2] as usize)
        })
    }

    /// Substitutes `x = t³, y = t, z = 1`.
    pub fn param_poly(&self) -> UniPoly {
        let max = self
            .terms
            .keys()
            .map(|m| 3 * m.0[0] + m.0[1])
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs = alloc::vec![Scalar::zero(); max + 1];
        for (m, c) in &self.terms {
            coeffs[(3 * m.0[0] + m.0[1]) as usize] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Value at the generic point `(α³ : α : 1)` of `B(h)`, as an element of `Q[t]/(h)`.
    pub fn eval_param<'a>(&self, ring: &'a QuotientRing) -> QuotElem<'a> {
        ring.reduce(&self.param_poly())
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TriPoly {
            type Output = TriPoly;
            fn $m(self, rhs: TriPoly) -> TriPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut parts = 0;
            if !abs.is_one() || m.degree() == 0 {
                write!(f, "{abs}")?;
                parts += 1;
            }
            for (name, e) in ["x", "y", "z"].iter().zip(m.0.iter()) {
                if *e == 0 {
                    continue;
                }
                if parts > 0 {
                    f.write_str("*")?;
                }
                parts += 1;
                f.write_str(name)?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn u() -> TriPoly {
        TriPoly::from_int_terms(&[([1, 0, 2], 1), ([0, 3, 0], -1)])
    }

    #[test]
    fn grlex_order() {
        let mons = Monomial::of_degree(2);
        assert_eq!(mons.len(), 6);
        assert_eq!(mons[0], Monomial::new(2, 0, 0));
        assert_eq!(mons[5], Monomial::new(0, 0, 2));
        assert!(mons.windows(2).all(|w| w[0] > w[1]));
        assert!(Monomial::new(0, 0, 3) > Monomial::new(2, 0, 0));
        assert_eq!(Monomial::of_degree(3).len(), 10);
        assert_eq!(Monomial::of_degree(6).len(), 28);
    }

    #[test]
    fn derivative_of_u() {
        assert_eq!(
            u().derivative(Var::Y),
            TriPoly::from_int_terms(&[([0, 2, 0], -3)])
        );
        assert_eq!(
            u().derivative(Var::Z),
            TriPoly::from_int_terms(&[([1, 0, 1], 2)])
        );
    }

    #[test]
    fn homogenize_u() {
        let affine = TriPoly::from_int_terms(&[([1, 0, 0], 1), ([0, 3, 0], -1)]);
        assert_eq!(affine.homogenize(3).unwrap(), u());
        assert!(affine.homogenize(2).is_err());
        assert_eq!(u().dehomogenize(), affine);
    }

    #[test]
    fn u_on_cuspidal_cubic() {
        assert!(u().param_poly().is_zero());
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &u() - &u();
        assert!(p.is_zero());
        assert_eq!(p.total_degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(u().to_string(), "x*z^2 - y^3");
        let v = TriPoly::from_int_terms(&[([3, 0, 0], 1), ([0, 2, 1], -1), ([0, 1, 2], -2)]);
        assert_eq!(v.to_string(), "x^3 - y^2*z - 2*y*z^2");
    }
}
