//! Deciding whether a form is a scalar multiple of a `k`-th power.
//!
//! If `S = R^k` with `LM(R) = M` (leading coefficient 1), the coefficient of
//! `M^{k−1}·n` in `R^k` equals `k·r_n` plus terms involving only monomials of
//! `R` strictly above `n`. Walking the monomials of `R` in descending grlex
//! order therefore determines `R` one coefficient at a time; a final exact
//! expansion confirms or refutes `S = R^k`.

use num_traits::Zero;

use crate::scalar::{self, Scalar};
use crate::tripoly::{Monomial, TriPoly};

/// Why a form is not a scalar multiple of a `k`-th power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerObstruction {
    Zero,
    NotHomogeneous,
    /// The degree is not divisible by `k`.
    Degree(u32),
    /// The leading monomial is not a `k`-th power.
    LeadingMonomial(Monomial),
    /// The candidate root's `k`-th power first disagrees at this monomial.
    Mismatch(Monomial),
}

/// Returns `R` with leading coefficient 1 and `form = lc(form) · R^k`.
pub fn kth_root(form: &TriPoly, k: u32) -> Result<TriPoly, PowerObstruction> {
    let (lead, lc) = match form.leading_term() {
        None => return Err(PowerObstruction::Zero),
        Some((m, c)) => (*m, c.clone()),
    };
    if !form.is_homogeneous() {
        return Err(PowerObstruction::NotHomogeneous);
    }
    let degree = lead.degree();
    if degree % k != 0 {
        return Err(PowerObstruction::Degree(degree));
    }
    if lead.0.iter().any(|e| e % k != 0) {
        return Err(PowerObstruction::LeadingMonomial(lead));
    }
    let top = Monomial(lead.0.map(|e| e / k));
    let target = form.scale(&lc.recip());
    let shift = Monomial(top.0.map(|e| e * (k - 1)));
    let kk = scalar::int(i64::from(k));

    let mut root = TriPoly::term(scalar::int(1), top);
    for n in Monomial::of_degree(degree / k)
        .into_iter()
        .filter(|n| *n < top)
    {
        let probe = shift.mul(&n);
        let have = root.pow(k).coeff(&probe);
        let want = target.coeff(&probe);
        let r = (want - have) / &kk;
        root.add_term(n, r);
    }
    let power = root.pow(k);
    let diff = &power - &target;
    match diff.leading_term() {
        None => Ok(root),
        Some((m, _)) => Err(PowerObstruction::Mismatch(*m)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerVerdict {
    NinthPowerOfLinear,
    CubeOfCubic,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectPowerReport {
    pub leading_coefficient: Scalar,
    pub ninth_root: Result<TriPoly, PowerObstruction>,
    pub cube_root: Result<TriPoly, PowerObstruction>,
    pub verdict: PowerVerdict,
}

/// Tests `Q = c·ℓ⁹` and `Q = c·R³` for a degree-9 form.
pub fn perfect_power_dichotomy(q: &TriPoly) -> PerfectPowerReport {
    let ninth_root = kth_root(q, 9);
    let cube_root = kth_root(q, 3);
    let verdict = match (&ninth_root, &cube_root) {
        (Ok(_), _) => PowerVerdict::NinthPowerOfLinear,
        (_, Ok(_)) => PowerVerdict::CubeOfCubic,
        _ => PowerVerdict::Neither,
    };
    PerfectPowerReport {
        leading_coefficient: q
            .leading_term()
            .map_or_else(Scalar::zero, |(_, c)| c.clone()),
        ninth_root,
        cube_root,
        verdict,
    }
}
