//! Independent numerical oracle for the general-position checks.
//!
//! Roots are seeded in `f64` by Durand–Kerner and polished by Newton in
//! fixed point with 256 fractional bits (≈ 77 digits). Each polished root
//! carries an inclusion radius `n·|h/h′|`; decisions are made only when the
//! quantity is clearly zero or clearly nonzero, otherwise the oracle panics.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PREC: u32 = 256;

#[derive(Clone, Debug)]
struct Cx {
    re: BigInt,
    im: BigInt,
}

impl Cx {
    fn zero() -> Self {
        Cx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn from_int(n: i64) -> Self {
        Cx {
            re: BigInt::from(n) << PREC,
            im: BigInt::zero(),
        }
    }

    fn from_f64(z: Complex64) -> Self {
        let conv = |x: f64| BigInt::from((x * 2f64.powi(52)).round() as i64) << (PREC - 52);
        Cx {
            re: conv(z.re),
            im: conv(z.im),
        }
    }

    fn add(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: (&self.re * &o.re - &self.im * &o.im) >> PREC,
            im: (&self.re * &o.im + &self.im * &o.re) >> PREC,
        }
    }

    fn div(&self, o: &Cx) -> Cx {
        let den = &o.re * &o.re + &o.im * &o.im;
        Cx {
            re: ((&self.re * &o.re + &self.im * &o.im) << PREC) / &den,
            im: ((&self.im * &o.re - &self.re * &o.im) << PREC) / &den,
        }
    }

    /// `|z|²` scaled by `2^(2·PREC)`.
    fn norm_sq(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `|z| < 2^(−bits)`.
    fn below(&self, bits: i64) -> bool {
        let exp = 2 * (i64::from(PREC) - bits);
        assert!(exp >= 0);
        self.norm_sq() < BigInt::from(1) << exp as u32
    }

    fn above(&self, bits: i64) -> bool {
        !self.below(bits)
    }
}

fn horner(coeffs: &[i64], z: &Cx) -> Cx {
    coeffs
        .iter()
        .rev()
        .fold(Cx::zero(), |acc, &c| acc.mul(z).add(&Cx::from_int(c)))
}

fn derivative(coeffs: &[i64]) -> Vec<i64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as i64)
        .collect()
}

fn durand_kerner(coeffs: &[i64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n] as f64;
    let monic: Vec<f64> = coeffs.iter().map(|&c| c as f64 / lc).collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let bound = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let prev = roots.clone();
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| {
                    acc * (roots[i] - roots[j])
                });
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
        if roots
            .iter()
            .zip(&prev)
            .all(|(a, b)| (a - b).norm() < 1e-14 * bound)
        {
            break;
        }
    }
    roots
}

/// Roots to within `2^(−200)`, each certified by an inclusion radius.
fn roots(coeffs: &[i64]) -> Vec<Cx> {
    let d = derivative(coeffs);
    let n = coeffs.len() - 1;
    let polished: Vec<Cx> = durand_kerner(coeffs)
        .into_iter()
        .map(|z0| {
            let mut z = Cx::from_f64(z0);
            for _ in 0..12 {
                z = z.sub(&horner(coeffs, &z).div(&horner(&d, &z)));
            }
            let step = horner(coeffs, &z).div(&horner(&d, &z));
            let radius = Cx {
                re: &step.re * n,
                im: &step.im * n,
            };
            assert!(radius.below(210), "root not certified");
            z
        })
        .collect();
    for i in 0..n {
        for j in 0..i {
            assert!(
                polished[i].sub(&polished[j]).above(60),
                "roots not separated"
            );
        }
    }
    polished
}

/// Clearly zero or clearly nonzero; anything in between is a bug in the oracle.
fn is_zero(z: &Cx, zero_bits: i64, nonzero_bits: i64) -> bool {
    if z.below(zero_bits) {
        true
    } else if z.above(nonzero_bits) {
        false
    } else {
        panic!("oracle cannot decide: value between 2^-{zero_bits} and 2^-{nonzero_bits}");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub collinear_ok: bool,
    pub conic_ok: bool,
    pub singular_cubic_ok: bool,
}

/// Gradient of a cubic form given as `(exponents, coefficient)` at a point.
fn gradient(terms: &[([u32; 3], i64)], p: &[Cx; 3]) -> [Cx; 3] {
    let pow = |z: &Cx, e: u32| (0..e).fold(Cx::from_int(1), |acc, _| acc.mul(z));
    let mut g = [Cx::zero(), Cx::zero(), Cx::zero()];
    for (e, c) in terms {
        for (var, slot) in g.iter_mut().enumerate() {
            if e[var] == 0 {
                continue;
            }
            let mut term = Cx::from_int(c * i64::from(e[var]));
            for k in 0..3 {
                let exp = if k == var { e[k] - 1 } else { e[k] };
                term = term.mul(&pow(&p[k], exp));
            }
            *slot = slot.add(&term);
        }
    }
    g
}

/// Position checks for an integral monic degree-8 seed, ascending coefficients.
pub fn oracle_position(coeffs: &[i64]) -> OracleVerdict {
    let r = roots(coeffs);
    let n = r.len();
    let mut collinear_ok = true;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if is_zero(&r[i].add(&r[j]).add(&r[k]), 190, 60) {
                    collinear_ok = false;
                }
            }
        }
    }
    let mut conic_ok = true;
    for i in 0..n {
        for j in i + 1..n {
            if is_zero(&r[i].add(&r[j]), 190, 60) {
                conic_ok = false;
            }
        }
    }
    // The cubic pencil through B is spanned by u = xz² − y³ and the cubic
    // obtained from t·h(t) by t^(3i+j) ↦ x^i y^j z^(3−i−j).
    let u = [([1, 0, 2], 1), ([0, 3, 0], -1)];
    let v: Vec<([u32; 3], i64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let e = k as u32 + 1;
            let (i, j) = (e / 3, e % 3);
            ([i, j, 3 - i - j], c)
        })
        .collect();
    let mut singular_cubic_ok = true;
    for a in &r {
        let point = [a.mul(a).mul(a), a.clone(), Cx::from_int(1)];
        let gu = gradient(&u, &point);
        let gv = gradient(&v, &point);
        let minors = [
            gu[0].mul(&gv[1]).sub(&gu[1].mul(&gv[0])),
            gu[0].mul(&gv[2]).sub(&gu[2].mul(&gv[0])),
            gu[1].mul(&gv[2]).sub(&gu[2].mul(&gv[1])),
        ];
        if minors.iter().all(|m| is_zero(m, 120, 40)) {
            singular_cubic_ok = false;
        }
    }
    OracleVerdict {
        collinear_ok,
        conic_ok,
        singular_cubic_ok,
    }
}

fn expand_roots(rs: &[i64]) -> Vec<i64> {
    let mut p = vec![1i64];
    for &r in rs {
        let mut next = vec![0i64; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= r * c;
        }
        p = next;
    }
    p
}

/// Deterministic mix of small seeds: generic, split over `Z` (exercising
/// zero-sum triples and ± pairs), and even (always containing ± pairs).
/// Only squarefree candidates with `h₀ ≠ 0` are kept.
pub fn random_small_seeds(count: usize, rng_seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = Vec::new();
    while out.len() < count {
        let candidate = match out.len() % 3 {
            0 => {
                let mut c: Vec<i64> = (0..7).map(|_| rng.gen_range(-3..=3)).collect();
                c.extend([0, 1]);
                c
            }
            1 => {
                let mut rs: Vec<i64> = Vec::new();
                while rs.len() < 7 {
                    let r = rng.gen_range(-6..=6);
                    if r != 0 && !rs.contains(&r) {
                        rs.push(r);
                    }
                }
                let last = -rs.iter().sum::<i64>();
                if last == 0 || rs.contains(&last) {
                    continue;
                }
                rs.push(last);
                expand_roots(&rs)
            }
            _ => {
                let mut c = vec![0i64; 9];
                for k in [0, 2, 4, 6] {
                    c[k] = rng.gen_range(-3..=3);
                }
                c[8] = 1;
                c
            }
        };
        if bertini_core::SeedPoly::from_ints(&candidate).is_ok() {
            out.push(candidate);
        }
    }
    out
}
