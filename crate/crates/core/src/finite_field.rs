//! Polynomials over `F_p` for word-sized primes, and distinct-degree
//! factorization for Frobenius cycle types.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::upoly::UniPoly;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime (Fermat).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes `2 ≤ p ≤ bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// A polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    /// Reduction of a rational polynomial; `None` if a denominator vanishes mod `p`.
    pub fn from_rational(f: &UniPoly, p: u64) -> Option<Self> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| crate::scalar::reduce_mod_prime(c, p))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(p, coeffs))
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        Self::new(
            p,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    (a + p - b) % p
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                Self::new(
                    self.p,
                    self.coeffs
                        .iter()
                        .map(|&c| mul_mod(c, inv, self.p))
                        .collect(),
                )
            }
        }
    }

    /// `(q, r)` with `self = q·g + r`; `g` must be nonzero.
    pub fn divrem(&self, g: &Self) -> (Self, Self) {
        let p = self.p;
        let dg = g.degree().expect("division by zero polynomial over F_p");
        let Some(df) = self.degree() else {
            return (self.clone(), self.clone());
        };
        if df < dg {
            return (Self::new(p, Vec::new()), self.clone());
        }
        let inv = inv_mod(g.coeffs[dg], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; df - dg + 1];
        for k in (0..=df - dg).rev() {
            let c = mul_mod(rem[k + dg], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &gj) in g.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(c, gj, p)) % p;
            }
            quot[k] = c;
        }
        rem.truncate(dg);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.divrem(g).1
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        Self::gcd(self, &self.derivative()).degree() == Some(0)
    }
}

/// Degrees of the irreducible factors of `h mod p`, i.e. the cycle type of a
/// Frobenius element at `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    pub prime: u64,
    /// Factor degrees, sorted descending.
    pub parts: Vec<usize>,
}

impl CycleType {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, part: usize) -> bool {
        self.parts.contains(&part)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}: ", self.prime)?;
        for (i, d) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Distinct-degree factorization of `h mod p`.
///
/// Returns `None` (skip this prime) when `p` divides a denominator or the
/// leading coefficient, or when `h mod p` is not squarefree.
pub fn ddf_degree_multiset(h: &UniPoly, p: u64) -> Option<CycleType> {
    let n = h.degree()?;
    let f = FpPoly::from_rational(h, p)?;
    if f.degree() != Some(n) || !f.is_squarefree() {
        return None;
    }
    let mut rest = f.monic();
    let x = FpPoly::x(p);
    let mut frob = x.clone();
    let mut parts = Vec::new();
    let mut d = 1;
    while rest.degree().is_some_and(|deg| deg >= 2 * d) {
        frob = frob.pow_mod(p, &rest);
        let g = FpPoly::gcd(&frob.sub(&x), &rest);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 {
            parts.extend(core::iter::repeat(d).take(gd / d));
            rest = rest.divrem(&g).0;
            frob = frob.rem(&rest);
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        parts.push(deg);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(CycleType { prime: p, parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(ddf_degree_multiset(&f, 5).unwrap().parts, vec![1, 1]);
        assert_eq!(ddf_degree_multiset(&f, 3).unwrap().parts, vec![2]);
        // t² + 1 ≡ (t + 1)² mod 2
        assert_eq!(ddf_degree_multiset(&f, 2), None);
    }

    #[test]
    fn octic_sums_to_eight() {
        let h = UniPoly::from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0, 1]);
        for p in primes_up_to(100) {
            if let Some(ct) = ddf_degree_multiset(&h, p) {
                assert_eq!(ct.total(), 8);
            }
        }
    }

    #[test]
    fn denominators_divisible_by_p_skip() {
        let f = UniPoly::new(vec![
            crate::scalar::ratio(1, 3),
            crate::scalar::int(0),
            crate::scalar::int(1),
        ]);
        assert_eq!(ddf_degree_multiset(&f, 3), None);
        assert!(ddf_degree_multiset(&f, 5).is_some());
    }

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
