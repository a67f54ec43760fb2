//! Exact general-position tests for `B(h) = {(α³ : α : 1)}`.
//!
//! On the cuspidal cubic `xz² = y³` parametrized by `(t³ : t : 1)`:
//! - three distinct points are collinear iff their parameters sum to zero
//!   (a line restricts to a cubic in `t` with no `t²` term);
//! - six distinct points lie on a conic iff their parameters sum to zero
//!   (no `t⁵` term). Since all eight roots sum to zero this happens iff the
//!   two remaining roots sum to zero, i.e. `gcd(h(t), h(−t)) ≠ 1`;
//! - every cubic through `B` lies in the pencil `⟨u, v⟩`, so a cubic singular
//!   at a point of `B` exists iff `∇u` and `∇v` are dependent there.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::resultant::{
    composed_sum_power_sums, from_power_sums, monic_integral, power_sums, resultant_int,
};
use crate::scalar::{self, Scalar};
use crate::seed::SeedPoly;
use crate::tripoly::{TriPoly, Var};
use crate::upoly::UniPoly;

/// Degree bookkeeping and values from the deflation slow path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDeflation {
    /// Degree of `T(s) = ∏_{ordered triples} (s − α − β − γ)`; always 512.
    pub deg_t: usize,
    /// Degree of `E(s) = ∏_{α, γ} (s − 2α − γ)`; always 64.
    pub deg_e: usize,
    /// Degree of `h₃(s) = ∏ (s − 3α)`; always 8.
    pub deg_h3: usize,
    /// Degree of `T_distinct = T·h₃² / E³`; always 336.
    pub deg_t_distinct: usize,
    pub e_at_zero: BigInt,
    pub t_distinct_at_zero: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearCheck {
    pub passes: bool,
    /// `T(0) = Res_t(h(t), g(−t))` with `g(s) = Res_t(h(t), h(s − t))`,
    /// computed on the integral model of `h`.
    pub t_at_zero: BigInt,
    pub slow_path: Option<TripleDeflation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCheck {
    pub passes: bool,
    /// Monic `gcd(h(t), h(−t))`.
    pub gcd: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCubicCheck {
    pub passes: bool,
    /// `∇u(t³, t, 1)` reduced mod `h`.
    pub grad_u: [UniPoly; 3],
    /// `∇v(t³, t, 1)` reduced mod `h`.
    pub grad_v: [UniPoly; 3],
    /// The three 2×2 minors, reduced mod `h`.
    pub minors: [UniPoly; 3],
    /// Monic `gcd(h, m₁, m₂, m₃)`.
    pub gcd: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionReport {
    pub collinear: CollinearCheck,
    pub conic: ConicCheck,
    pub singular_cubic: SingularCubicCheck,
}

impl PositionReport {
    pub fn passes(&self) -> bool {
        self.collinear.passes && self.conic.passes && self.singular_cubic.passes
    }
}

/// Monic integral polynomial with roots `D·α`, `D` the common denominator.
/// Zero-sum relations among roots are invariant under this scaling.
pub fn integral_model(h: &UniPoly) -> Vec<BigInt> {
    let den = scalar::common_denominator(h.coeffs());
    let scaled = h
        .monic()
        .scale_roots(&Scalar::from_integer(den))
        .expect("nonzero scale");
    monic_integral(&scaled).expect("scaled monic polynomial is integral")
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient by a monic divisor; panics if the division leaves a remainder.
fn int_div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut rem = a.to_vec();
    let mut quot = alloc::vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = core::mem::take(&mut rem[k + db]);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    assert!(
        rem.iter().all(Zero::is_zero),
        "deflation division is not exact"
    );
    quot
}

fn reflect_int(a: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect()
}

fn scale_roots_int(a: &[BigInt], k: i64) -> Vec<BigInt> {
    let n = a.len() - 1;
    let k = BigInt::from(k);
    a.iter()
        .enumerate()
        .map(|(i, c)| c * scalar::bigint_pow(&k, n - i))
        .collect()
}

/// `g(s) = ∏_{α, β} (s − α − β)` for a monic integral `h` (ordered pairs, repeats allowed).
pub fn pair_sum_poly(h: &[BigInt]) -> Vec<BigInt> {
    let n = h.len() - 1;
    let deg = n * n;
    let p = power_sums(h, deg);
    from_power_sums(&composed_sum_power_sums(&p, &p, deg), deg)
}

/// `T(s) = ∏_{α, β, γ} (s − α − β − γ)` over ordered triples.
pub fn triple_sum_poly(h: &[BigInt]) -> Vec<BigInt> {
    let n = h.len() - 1;
    let deg = n * n * n;
    let p = power_sums(h, deg);
    let pairs = composed_sum_power_sums(&p, &p, deg);
    from_power_sums(&composed_sum_power_sums(&pairs, &p, deg), deg)
}

/// `E(s) = ∏_{α, γ} (s − 2α − γ)`.
pub fn double_plus_one_poly(h: &[BigInt]) -> Vec<BigInt> {
    let n = h.len() - 1;
    let deg = n * n;
    let p = power_sums(h, deg);
    let p2 = power_sums(&scale_roots_int(h, 2), deg);
    from_power_sums(&composed_sum_power_sums(&p2, &p, deg), deg)
}

/// Passes iff no three distinct roots of `h` sum to zero.
pub fn check_three_collinear(seed: &SeedPoly) -> CollinearCheck {
    let h = integral_model(seed.poly());
    let g = pair_sum_poly(&h);
    // h monic: Res_t(h(t), g(−t)) = ∏_α g(−α) = T(0).
    let t_at_zero = resultant_int(&h, &reflect_int(&g));
    if !t_at_zero.is_zero() {
        return CollinearCheck {
            passes: true,
            t_at_zero,
            slow_path: None,
        };
    }
    let t = triple_sum_poly(&h);
    let e = double_plus_one_poly(&h);
    let h3 = scale_roots_int(&h, 3);
    let numerator = int_mul(&t, &int_mul(&h3, &h3));
    let e3 = int_mul(&e, &int_mul(&e, &e));
    let t_distinct = int_div_exact_monic(&numerator, &e3);
    let t_distinct_at_zero = t_distinct[0].clone();
    let slow = TripleDeflation {
        deg_t: t.len() - 1,
        deg_e: e.len() - 1,
        deg_h3: h3.len() - 1,
        deg_t_distinct: t_distinct.len() - 1,
        e_at_zero: e[0].clone(),
        t_distinct_at_zero,
    };
    CollinearCheck {
        passes: !slow.t_distinct_at_zero.is_zero(),
        t_at_zero,
        slow_path: Some(slow),
    }
}

/// Passes iff no six points of `B(h)` lie on a conic, i.e. `gcd(h(t), h(−t)) = 1`.
pub fn check_six_conic(seed: &SeedPoly) -> ConicCheck {
    let h = seed.poly();
    let gcd = UniPoly::gcd(h, &h.reflect());
    ConicCheck {
        passes: gcd.is_one(),
        gcd,
    }
}

/// Minor test for an arbitrary pair of cubics; [`check_singular_cubic`]
/// uses the pencil `⟨u, v⟩`.
pub fn check_singular_cubic_with(seed: &SeedPoly, u: &TriPoly, v: &TriPoly) -> SingularCubicCheck {
    let ring = seed.ring();
    let grad = |f: &TriPoly| Var::ALL.map(|var| f.derivative(var).eval_param(ring));
    let gu = grad(u);
    let gv = grad(v);
    let minor =
        |i: usize, j: usize| (&(&gu[i] * &gv[j]) - &(&gu[j] * &gv[i])).into_representative();
    let minors = [minor(0, 1), minor(0, 2), minor(1, 2)];
    let gcd = minors
        .iter()
        .fold(seed.poly().monic(), |g, m| UniPoly::gcd(&g, m));
    SingularCubicCheck {
        passes: gcd.is_one(),
        grad_u: gu.map(|e| e.into_representative()),
        grad_v: gv.map(|e| e.into_representative()),
        minors,
        gcd,
    }
}

/// Passes iff no cubic through `B(h)` is singular at a point of `B(h)`.
pub fn check_singular_cubic(seed: &SeedPoly) -> SingularCubicCheck {
    check_singular_cubic_with(seed, &crate::curve::build_u(), &crate::curve::build_v(seed))
}

pub fn position_report(seed: &SeedPoly) -> PositionReport {
    PositionReport {
        collinear: check_three_collinear(seed),
        conic: check_six_conic(seed),
        singular_cubic: check_singular_cubic(seed),
    }
}
