//! Arbitrary-precision rationals and a few integer helpers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// An exact rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `true` iff `n ≥ 0` and `n` is a perfect square.
pub fn int_is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `true` iff `q` is the square of a rational.
pub fn rational_is_square(q: &Scalar) -> bool {
    int_is_square(q.numer()) && int_is_square(q.denom())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn pow(base: &Scalar, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn bigint_pow(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

/// Residue of a rational modulo a prime; `None` when the denominator vanishes mod `p`.
pub fn reduce_mod_prime(q: &Scalar, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = mod_u64(q.numer(), &pb);
    let den = mod_u64(q.denom(), &pb);
    if den == 0 {
        return None;
    }
    Some(crate::finite_field::mul_mod(
        num,
        crate::finite_field::inv_mod(den, p),
        p,
    ))
}

fn mod_u64(n: &BigInt, p: &BigInt) -> u64 {
    let r = n.mod_floor(p);
    let (sign, digits) = r.to_u64_digits();
    match sign {
        Sign::NoSign => 0,
        _ => digits[0],
    }
}

/// `true` iff the rational is an integer.
pub fn is_integral(q: &Scalar) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        assert!(int_is_square(&BigInt::from(144)));
        assert!(int_is_square(&BigInt::from(0)));
        assert!(!int_is_square(&BigInt::from(-4)));
        let big = (BigInt::one() << 64u32) + 1;
        assert!(!int_is_square(&big));
        let sq = (BigInt::one() << 64u32) * (BigInt::one() << 64u32);
        assert!(int_is_square(&sq));
    }

    #[test]
    fn rational_squares() {
        assert!(rational_is_square(&ratio(9, 4)));
        assert!(!rational_is_square(&ratio(9, 2)));
        assert!(!rational_is_square(&ratio(-1, 4)));
    }

    #[test]
    fn mod_prime() {
        assert_eq!(reduce_mod_prime(&ratio(1, 2), 5), Some(3));
        assert_eq!(reduce_mod_prime(&int(-1), 7), Some(6));
        assert_eq!(reduce_mod_prime(&ratio(1, 5), 5), None);
    }
}
