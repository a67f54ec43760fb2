use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use super::{
    build_hyperbolic, enumerate_short_vectors, f2_rank, orth_complement, perm_isometry, F2Space,
    Permutation,
};
use crate::error::{Error, Result};

fn reduce_mod2(v: &[i64]) -> u32 {
    v.iter()
        .enumerate()
        .fold(0, |acc, (i, &c)| acc | ((c.rem_euclid(2) as u32) << i))
}

fn apply_mod2(m: &[Vec<i64>], x: u32) -> u32 {
    let rows: Vec<u32> = m.iter().map(|r| reduce_mod2(r)).collect();
    rows.iter()
        .enumerate()
        .fold(0, |acc, (i, r)| acc | (((r & x).count_ones() & 1) << i))
}

/// The mod-2 identification of `ω^⊥/2` (inside `I^{1,8}/2`) with `F₂⁸`
/// obtained by dropping the `e₀` coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F8sReport {
    /// Dimension of `{c : (c, ω̄) = 0}`.
    pub complement_dimension: usize,
    /// The integral complement basis reduces to a basis of that subspace.
    pub complement_reduction_rank: usize,
    pub bijective: bool,
    pub linear: bool,
    /// Equivariance under `(1 2)` and `(1 2 … 8)`.
    pub equivariant: [bool; 2],
    pub all_ones_fixed: bool,
    /// The form carried over to `F₂⁸`, as bitmask rows.
    pub induced_form: Vec<u32>,
    pub induced_is_standard: bool,
}

impl F8sReport {
    pub fn passes(&self) -> bool {
        self.complement_dimension == 8
            && self.complement_reduction_rank == 8
            && self.bijective
            && self.linear
            && self.equivariant.iter().all(|&e| e)
            && self.all_ones_fixed
    }
}

pub fn f8s_iso_check() -> Result<F8sReport> {
    let h = build_hyperbolic(1)?;
    let ambient = F2Space::from_integer_gram(h.lattice.gram())?;
    let omega = reduce_mod2(&h.omega);
    let sub: Vec<u32> = (0..1u32 << 9)
        .filter(|&c| ambient.pair(c, omega) == 0)
        .collect();
    let complement_dimension = sub.len().trailing_zeros() as usize;

    let comp = orth_complement(&h.lattice, &h.omega)?;
    let reduced: Vec<u32> = comp.basis.iter().map(|b| reduce_mod2(b)).collect();
    let complement_reduction_rank = if reduced.iter().all(|&b| ambient.pair(b, omega) == 0) {
        f2_rank(&reduced)
    } else {
        0
    };

    let phi = |c: u32| c >> 1;
    let image: BTreeSet<u32> = sub.iter().map(|&c| phi(c)).collect();
    let bijective = image.len() == sub.len() && image.len() == 256;
    let linear = sub
        .iter()
        .all(|&a| sub.iter().all(|&b| phi(a ^ b) == phi(a) ^ phi(b)));

    let generators = [
        Permutation::transposition(8, 1, 2),
        Permutation::long_cycle(8),
    ];
    let mut equivariant = [false; 2];
    let mut all_ones_fixed = image.contains(&0xff);
    for (slot, tau) in equivariant.iter_mut().zip(&generators) {
        let mu = perm_isometry(tau);
        let permute8 = |a: u32| (0..8).fold(0u32, |acc, i| acc | (((a >> i) & 1) << tau.apply(i)));
        *slot = sub.iter().all(|&c| {
            let moved = apply_mod2(&mu, c);
            ambient.pair(moved, omega) == 0 && phi(moved) == permute8(phi(c))
        });
        all_ones_fixed &= permute8(0xff) == 0xff;
    }

    // φ⁻¹(a): restore the e₀ bit from the parity condition.
    let lift = |a: u32| (a << 1) | (a.count_ones() & 1);
    let induced_form: Vec<u32> = (0..8)
        .map(|i| {
            (0..8).fold(0u32, |acc, j| {
                acc | (ambient.pair(lift(1 << i), lift(1 << j)) << j)
            })
        })
        .collect();
    let induced_is_standard = induced_form.iter().enumerate().all(|(i, &r)| r == 1 << i);

    Ok(F8sReport {
        complement_dimension,
        complement_reduction_rank,
        bijective,
        linear,
        equivariant,
        all_ones_fixed,
        induced_form,
        induced_is_standard,
    })
}

/// The classes `vᵢ = ℓᵢ + K` in `Pic = ⟨f₀, ℓ₁, …, ℓ₈⟩` with `K = −3f₀ + Σ ℓᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardReport {
    pub k_squared: i64,
    pub v_norms: Vec<i64>,
    pub v_cross_minus_one: bool,
    pub v_orthogonal_to_k: bool,
    pub mod2_rank: usize,
    pub mod2_gram_is_j_minus_i: bool,
    /// Determinant over `F₂` of the mod-2 Gram matrix of the `v̄ᵢ`.
    pub mod2_det: u32,
}

impl PicardReport {
    pub fn passes(&self) -> bool {
        self.k_squared == 1
            && self.v_norms.iter().all(|&n| n == -2)
            && self.v_cross_minus_one
            && self.v_orthogonal_to_k
            && self.mod2_rank == 8
            && self.mod2_gram_is_j_minus_i
            && self.mod2_det == 1
    }
}

pub fn picard_model_check() -> Result<PicardReport> {
    let h = build_hyperbolic(1)?;
    let lat = &h.lattice;
    let k = &h.omega;
    let v: Vec<Vec<i64>> = (1..9)
        .map(|i| {
            let mut vi = k.clone();
            vi[i] += 1;
            vi
        })
        .collect();
    let v_norms = v.iter().map(|vi| lat.norm(vi)).collect();
    let v_cross_minus_one = (0..8).all(|i| (0..8).all(|j| i == j || lat.pair(&v[i], &v[j]) == -1));
    let v_orthogonal_to_k = v.iter().all(|vi| lat.pair(vi, k) == 0);

    let reduced: Vec<u32> = v.iter().map(|vi| reduce_mod2(vi)).collect();
    let ambient = F2Space::from_integer_gram(lat.gram())?;
    let gram_rows: Vec<u32> = reduced
        .iter()
        .map(|&a| (0..8).fold(0u32, |acc, j| acc | (ambient.pair(a, reduced[j]) << j)))
        .collect();
    let mod2_gram_is_j_minus_i = gram_rows
        .iter()
        .enumerate()
        .all(|(i, &r)| r == 0xff ^ (1 << i));
    let mod2_det = u32::from(f2_rank(&gram_rows) == 8);

    Ok(PicardReport {
        k_squared: lat.norm(k),
        v_norms,
        v_cross_minus_one,
        v_orthogonal_to_k,
        mod2_rank: f2_rank(&reduced),
        mod2_gram_is_j_minus_i,
        mod2_det,
    })
}

/// `q(x) = (x,x)/2 mod 2` on `E₈/2E₈` and the action of root reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    /// Nonzero classes with `q = 1` and `q = 0`.
    pub q_one: usize,
    pub q_zero: usize,
    pub roots: usize,
    pub root_classes: usize,
    pub roots_have_q_one: bool,
    /// The basis-extended `q` matches the integer computation on every class.
    pub polarization_consistent: bool,
    pub reflections_preserve_q: bool,
    /// Each `s_r` is an integral isometry of the complement.
    pub reflections_integral: bool,
}

impl CensusReport {
    pub fn passes(&self) -> bool {
        self.q_one == 120
            && self.q_zero == 135
            && self.roots == 240
            && self.root_classes == 120
            && self.roots_have_q_one
            && self.polarization_consistent
            && self.reflections_preserve_q
            && self.reflections_integral
    }
}

pub fn mod2_quadratic_census() -> Result<CensusReport> {
    let h = build_hyperbolic(1)?;
    let comp = orth_complement(&h.lattice, &h.omega)?;
    let gram = comp.lattice.gram();
    let space = F2Space::from_integer_gram(gram)?;
    let lat = &comp.lattice;

    let coords = |x: u32| -> Vec<i64> { (0..8).map(|i| i64::from((x >> i) & 1)).collect() };
    let q_int = |x: u32| (lat.norm(&coords(x)) / 2).rem_euclid(2) as u32;

    let mut q_one = 0;
    let mut q_zero = 0;
    let mut polarization_consistent = true;
    for x in 1..256u32 {
        let q = q_int(x);
        if q == 1 {
            q_one += 1;
        } else {
            q_zero += 1;
        }
        polarization_consistent &= space.q(x) == Some(q);
    }

    let roots = enumerate_short_vectors(gram, -2)?;
    let classes: BTreeSet<u32> = roots.iter().map(|r| reduce_mod2(r)).collect();
    let roots_have_q_one = classes.iter().all(|&c| space.q(c) == Some(1));
    let reflections_preserve_q = classes.iter().all(|&r| {
        (0..256u32).all(|x| {
            let image = if space.pair(x, r) == 1 { x ^ r } else { x };
            space.q(image) == space.q(x)
        })
    });
    let basis: Vec<Vec<i64>> = (0..8).map(|i| coords(1 << i)).collect();
    let reflections_integral = roots.iter().all(|r| {
        let s: Vec<Vec<i64>> = basis
            .iter()
            .map(|b| {
                let t = lat.pair(b, r);
                b.iter().zip(r).map(|(bi, ri)| bi + t * ri).collect()
            })
            .collect();
        (0..8).all(|i| (0..8).all(|j| lat.pair(&s[i], &s[j]) == gram[i][j]))
    });

    Ok(CensusReport {
        q_one,
        q_zero,
        roots: roots.len(),
        root_classes: classes.len(),
        roots_have_q_one,
        polarization_consistent,
        reflections_preserve_q,
        reflections_integral,
    })
}

/// Outcome for one tuple `z₁, …, z_m` with `φ(zᵢ, zⱼ) = 1` for `i ≠ j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleOutcome {
    pub m: usize,
    pub independent: bool,
    /// No nonzero combination `Σ aᵢzᵢ` pairs to zero with every `zⱼ`.
    pub vanish_holds: bool,
    /// The form restricted to the span of the tuple is nondegenerate.
    pub restriction_nondegenerate: bool,
}

impl TupleOutcome {
    pub fn holds(&self) -> bool {
        self.independent && self.vanish_holds && self.restriction_nondegenerate
    }
}

pub fn check_pairing_tuple(form: &F2Space, tuple: &[u32]) -> Result<TupleOutcome> {
    if !form.is_alternating() {
        return Err(Error::InvalidArgument("form must be alternating"));
    }
    let m = tuple.len();
    if m == 0 || m % 2 == 1 || m > 20 {
        return Err(Error::InvalidArgument(
            "tuple length must be even, between 2 and 20",
        ));
    }
    for i in 0..m {
        for j in 0..i {
            if form.pair(tuple[i], tuple[j]) != 1 {
                return Err(Error::InvalidArgument("tuple elements must pair to 1"));
            }
        }
    }
    let funcs: Vec<u32> = tuple.iter().map(|&z| form.functional(z)).collect();
    let vanish_holds = (1..1u32 << m).all(|a| {
        let z = (0..m)
            .filter(|i| (a >> i) & 1 == 1)
            .fold(0, |acc, i| acc ^ tuple[i]);
        funcs.iter().any(|f| (f & z).count_ones() & 1 == 1)
    });
    // On an independent tuple the restriction is nondegenerate iff the
    // Gram matrix (φ(zᵢ, zⱼ)) is invertible.
    let independent = f2_rank(tuple) == m;
    let gram: Vec<u32> = funcs
        .iter()
        .map(|f| {
            (0..m).fold(0u32, |acc, j| {
                acc | (((f & tuple[j]).count_ones() & 1) << j)
            })
        })
        .collect();
    Ok(TupleOutcome {
        m,
        independent,
        vanish_holds,
        restriction_nondegenerate: independent && f2_rank(&gram) == m,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LinalgSummary {
    pub instances: u64,
    pub counterexamples: u64,
    /// Random attempts discarded because no admissible tuple existed.
    pub restarts: u64,
}

impl LinalgSummary {
    pub fn passes(&self) -> bool {
        self.instances > 0 && self.counterexamples == 0
    }
}

fn alternating_form(dim: usize, bits: u64) -> F2Space {
    let mut rows = vec![0u32; dim];
    let mut k = 0;
    for i in 0..dim {
        for j in i + 1..dim {
            if (bits >> k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    F2Space::new(dim, rows).expect("symmetric by construction")
}

/// Every alternating form on `F₂^dim` for `dim ≤ max_dim`, every even-length
/// set of pairwise-1 vectors (of any length, so oversized sets would show up
/// as dependent).
pub fn exhaustive_linalg_check(max_dim: usize) -> Result<LinalgSummary> {
    if max_dim == 0 || max_dim > 5 {
        return Err(Error::InvalidArgument(
            "exhaustive check supports dimensions 1..=5",
        ));
    }
    let mut summary = LinalgSummary::default();
    for dim in 1..=max_dim {
        let pairs = dim * (dim - 1) / 2;
        for bits in 0..1u64 << pairs {
            let form = alternating_form(dim, bits);
            let mut chosen = Vec::new();
            extend_cliques(&form, 1, &mut chosen, &mut summary)?;
        }
    }
    Ok(summary)
}

fn extend_cliques(
    form: &F2Space,
    start: u32,
    chosen: &mut Vec<u32>,
    summary: &mut LinalgSummary,
) -> Result<()> {
    if !chosen.is_empty() && chosen.len() % 2 == 0 {
        summary.instances += 1;
        if !check_pairing_tuple(form, chosen)?.holds() {
            summary.counterexamples += 1;
        }
    }
    for z in start..1u32 << form.dim() {
        if chosen.iter().all(|&c| form.pair(c, z) == 1) {
            chosen.push(z);
            extend_cliques(form, z + 1, chosen, summary)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Solutions of `popcount(maskᵢ & z) ≡ rhsᵢ (mod 2)`: a particular solution
/// and a kernel basis, or `None` when inconsistent.
fn solve_affine(dim: usize, equations: &[(u32, u32)]) -> Option<(u32, Vec<u32>)> {
    let mut rows = equations.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..rows.len()).find(|&i| (rows[i].0 >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let (pm, pr) = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && (row.0 >> col) & 1 == 1 {
                row.0 ^= pm;
                row.1 ^= pr;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|&(_, rhs)| rhs == 1) {
        return None;
    }
    let particular = pivots
        .iter()
        .zip(&rows)
        .fold(0, |acc, (&c, &(_, rhs))| acc | (rhs << c));
    let kernel = (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            pivots
                .iter()
                .zip(&rows)
                .filter(|(_, (mask, _))| (mask >> f) & 1 == 1)
                .fold(1u32 << f, |acc, (&c, _)| acc | (1 << c))
        })
        .collect();
    Some((particular, kernel))
}

/// Random alternating forms on `F₂^dim`, each with one random admissible
/// `m`-tuple.
pub fn random_linalg_check<R: RngCore>(
    dim: usize,
    m: usize,
    trials: u64,
    rng: &mut R,
) -> Result<LinalgSummary> {
    if dim == 0 || dim > 11 || m == 0 || m % 2 == 1 || m > dim {
        return Err(Error::InvalidArgument(
            "need 1 ≤ dim ≤ 11 and even 2 ≤ m ≤ dim",
        ));
    }
    let pairs = dim * (dim - 1) / 2;
    let mut summary = LinalgSummary::default();
    while summary.instances < trials {
        let form = alternating_form(dim, rng.next_u64() & ((1u64 << pairs) - 1));
        record_random_tuple(&form, m, rng, &mut summary)?;
    }
    Ok(summary)
}

/// Random admissible `m`-tuples for one fixed alternating form.
pub fn random_tuples_check<R: RngCore>(
    form: &F2Space,
    m: usize,
    trials: u64,
    rng: &mut R,
) -> Result<LinalgSummary> {
    if !form.is_alternating() || m == 0 || m % 2 == 1 || m > form.dim() {
        return Err(Error::InvalidArgument(
            "need an alternating form and even 2 ≤ m ≤ dim",
        ));
    }
    let mut summary = LinalgSummary::default();
    let mut attempts = 0u64;
    while summary.instances < trials {
        record_random_tuple(form, m, rng, &mut summary)?;
        attempts += 1;
        if summary.instances == 0 && attempts >= 1000 {
            return Err(Error::InvalidArgument(
                "form admits no tuple of this length",
            ));
        }
    }
    Ok(summary)
}

/// Builds a tuple one vector at a time from the affine conditions
/// `φ(z, zⱼ) = 1`, choosing uniformly among the solutions.
fn record_random_tuple<R: RngCore>(
    form: &F2Space,
    m: usize,
    rng: &mut R,
    summary: &mut LinalgSummary,
) -> Result<()> {
    let dim = form.dim();
    let mut tuple: Vec<u32> = Vec::new();
    while tuple.len() < m {
        let equations: Vec<(u32, u32)> = tuple.iter().map(|&z| (form.functional(z), 1)).collect();
        let Some((particular, kernel)) = solve_affine(dim, &equations) else {
            summary.restarts += 1;
            return Ok(());
        };
        let choice = rng.next_u32();
        let z = kernel
            .iter()
            .enumerate()
            .filter(|(i, _)| (choice >> i) & 1 == 1)
            .fold(particular, |acc, (_, k)| acc ^ k);
        if z != 0 {
            tuple.push(z);
        }
    }
    summary.instances += 1;
    if !check_pairing_tuple(form, &tuple)?.holds() {
        summary.counterexamples += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn f8s() {
        let r = f8s_iso_check().unwrap();
        assert!(r.passes(), "{r:?}");
        assert!(!r.induced_is_standard);
    }

    #[test]
    fn picard() {
        let r = picard_model_check().unwrap();
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn census() {
        let r = mod2_quadratic_census().unwrap();
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn linalg_small_dims_exhaustive() {
        let s = exhaustive_linalg_check(4).unwrap();
        assert!(s.passes(), "{s:?}");
    }

    #[test]
    fn linalg_random_dim8() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = random_linalg_check(8, 8, 200, &mut rng).unwrap();
        assert!(s.passes(), "{s:?}");
    }

    #[test]
    fn linalg_random_standard_symplectic() {
        let rows = (0..8).map(|i| 1u32 << (i ^ 1)).collect();
        let form = F2Space::new(8, rows).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s = random_tuples_check(&form, 4, 200, &mut rng).unwrap();
        assert!(s.passes(), "{s:?}");
    }

    #[test]
    fn lemma_rejects_bad_input() {
        let sym = F2Space::new(2, vec![0b01, 0b10]).unwrap();
        assert!(check_pairing_tuple(&sym, &[1, 2]).is_err());
        let alt = F2Space::new(2, vec![0b10, 0b01]).unwrap();
        assert!(check_pairing_tuple(&alt, &[1, 2]).unwrap().holds());
        assert!(check_pairing_tuple(&alt, &[1, 1]).is_err());
        assert!(check_pairing_tuple(&alt, &[1]).is_err());
    }

    #[test]
    fn affine_solver() {
        let (p, k) = solve_affine(3, &[(0b011, 1), (0b110, 0)]).unwrap();
        assert_eq!((0b011 & p).count_ones() & 1, 1);
        assert_eq!((0b110 & p).count_ones() & 1, 0);
        assert_eq!(k.len(), 1);
        assert!(solve_affine(2, &[(0b01, 1), (0b01, 0)]).is_none());
    }
}
