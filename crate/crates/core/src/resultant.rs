//! Resultants, discriminants and root-sum ("composed sum") polynomials.
//!
//! Resultants use the subresultant pseudo-remainder sequence over `Z` after
//! clearing denominators, so no intermediate rationals appear. Composed sums
//! `∏ (s − α − β)` go through power sums and Newton's identities, which is
//! exact in characteristic zero and far cheaper than bivariate resultants.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::upoly::UniPoly;

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Pseudo-remainder: `lc(b)^{deg a − deg b + 1} · a mod b`, with `deg a ≥ deg b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut remaining = a.len() - b.len() + 1;
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lead = r.pop().expect("nonempty");
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            r[k + j] -= &lead * bj;
        }
        trim(&mut r);
        remaining -= 1;
    }
    let factor = scalar::bigint_pow(lc, remaining);
    r.iter_mut().for_each(|c| *c *= &factor);
    r
}

/// Resultant of two nonzero integer polynomials (ascending coefficients).
pub fn resultant_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (da, db) = (a.len() - 1, b.len() - 1);
    if da == 0 {
        return scalar::bigint_pow(&a[0], db);
    }
    if db == 0 {
        return scalar::bigint_pow(&b[0], da);
    }
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut sign = BigInt::one();
    if da < db {
        core::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    let (ca, cb) = (content(&a), content(&b));
    a.iter_mut().for_each(|c| *c /= &ca);
    b.iter_mut().for_each(|c| *c /= &cb);
    let scale = scalar::bigint_pow(&ca, b.len() - 1) * scalar::bigint_pow(&cb, a.len() - 1);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (deg_a, deg_b) = (a.len() - 1, b.len() - 1);
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return BigInt::zero();
        }
        let divisor = &g * scalar::bigint_pow(&h, delta);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().cloned().expect("nonzero");
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => scalar::bigint_pow(&g, delta) / scalar::bigint_pow(&h, delta - 1),
        };
        if b.len() == 1 {
            let deg_a = a.len() - 1;
            let lb = &b[0];
            let res = scalar::bigint_pow(lb, deg_a) / scalar::bigint_pow(&h, deg_a - 1);
            return sign * scale * res;
        }
    }
}

/// `Res_t(f, g) = lc(f)^{deg g} · ∏_{f(α)=0} g(α)`.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Scalar> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidArgument("resultant of the zero polynomial"));
    }
    let (cf, pf) = f.integer_primitive();
    let (cg, pg) = g.integer_primitive();
    let (df, dg) = (pf.len() - 1, pg.len() - 1);
    let r = resultant_int(&pf, &pg);
    Ok(scalar::pow(&cf, dg) * scalar::pow(&cg, df) * Scalar::from_integer(r))
}

/// `(−1)^{n(n−1)/2} · Res(h, h′) / lc(h)`.
pub fn discriminant(h: &UniPoly) -> Result<Scalar> {
    let n = match h.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::InvalidArgument(
                "discriminant of a constant polynomial",
            ))
        }
    };
    if n == 1 {
        return Ok(Scalar::one());
    }
    let r = resultant(h, &h.derivative())?;
    let lc = h.lc().expect("nonzero");
    let d = r / lc;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Power sums `p_0 = n, p_1, …, p_count` of the roots of a monic integer polynomial.
pub fn power_sums(monic: &[BigInt], count: usize) -> Vec<BigInt> {
    let n = monic.len() - 1;
    debug_assert!(monic[n].is_one());
    let mut p = Vec::with_capacity(count + 1);
    p.push(BigInt::from(n));
    for k in 1..=count {
        // Newton: p_k + a_{n-1} p_{k-1} + … + (k a_{n-k} when k ≤ n) = 0.
        let mut acc = BigInt::zero();
        for i in 1..=k.min(n) {
            let a = &monic[n - i];
            if a.is_zero() {
                continue;
            }
            if i == k {
                acc += a * BigInt::from(k);
            } else {
                acc += a * &p[k - i];
            }
        }
        p.push(-acc);
    }
    p
}

/// Monic integer polynomial of degree `degree` whose root power sums are `p[1..]`.
pub fn from_power_sums(p: &[BigInt], degree: usize) -> Vec<BigInt> {
    assert!(p.len() > degree, "need power sums up to the degree");
    // a[degree - k] = (−1)^k e_k; k e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i.
    let mut e: Vec<BigInt> = Vec::with_capacity(degree + 1);
    e.push(BigInt::one());
    for k in 1..=degree {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        debug_assert!(
            r.is_zero(),
            "power sums are not those of an integral polynomial"
        );
        e.push(q);
    }
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (k, ek) in e.into_iter().enumerate() {
        coeffs[degree - k] = if k % 2 == 1 { -ek } else { ek };
    }
    coeffs
}

/// Power sums of all pairwise sums `α + β` (ordered, with repetition) up to `count`,
/// given the power sums of the two root multisets.
pub fn composed_sum_power_sums(pa: &[BigInt], pb: &[BigInt], count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count + 1);
    let mut binom: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..=count {
        if k > 0 {
            let mut next = Vec::with_capacity(k + 1);
            next.push(BigInt::one());
            for j in 1..k {
                next.push(&binom[j - 1] + &binom[j]);
            }
            next.push(BigInt::one());
            binom = next;
        }
        let mut acc = BigInt::zero();
        for j in 0..=k {
            let t = &pa[j] * &pb[k - j];
            if !t.is_zero() {
                acc += &binom[j] * t;
            }
        }
        out.push(acc);
    }
    out
}

/// Integer coefficients of a monic integral polynomial, or an error.
pub fn monic_integral(f: &UniPoly) -> Result<Vec<BigInt>> {
    if !f.lc().is_some_and(One::is_one) {
        return Err(Error::InvalidArgument("expected a monic polynomial"));
    }
    f.to_integers()
        .ok_or(Error::InvalidArgument("expected integer coefficients"))
}

/// `Res_t(f(t), g(s − t)) = ∏ (s − α − β)` for monic integral `f`, `g`.
pub fn composed_sum(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
    let (fi, gi) = (monic_integral(f)?, monic_integral(g)?);
    let n = (fi.len() - 1) * (gi.len() - 1);
    let ps = composed_sum_power_sums(&power_sums(&fi, n), &power_sums(&gi, n), n);
    Ok(UniPoly::from_bigints(&from_power_sums(&ps, n)))
}
