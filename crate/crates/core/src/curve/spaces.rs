//! The linear systems of cubics through `B(h)` and of sextics singular along `B(h)`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::quotient::QuotientRing;
use crate::scalar::Scalar;
use crate::seed::SeedPoly;
use crate::tripoly::{Monomial, TriPoly, Var};

/// Cubic forms vanishing on `B(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSpace {
    pub dimension: usize,
    pub basis: Vec<TriPoly>,
    pub contains_u: bool,
    pub contains_v: bool,
    /// Rank of `{u, v}` in coefficient space.
    pub uv_rank: usize,
    /// Every basis element has zero `z³` coefficient, i.e. vanishes at `(0:0:1)`.
    pub vanishes_at_ninth_point: bool,
}

impl CubicSpace {
    pub const EXPECTED_DIMENSION: usize = 2;

    pub fn passes(&self) -> bool {
        self.dimension == Self::EXPECTED_DIMENSION
            && self.contains_u
            && self.contains_v
            && self.uv_rank == Self::EXPECTED_DIMENSION
            && self.vanishes_at_ninth_point
    }
}

/// Sextic forms vanishing with their first partials on `B(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticSpace {
    pub dimension: usize,
    pub basis: Vec<TriPoly>,
    /// Membership of `u², uv, v², w`.
    pub members: [bool; 4],
    /// Rank of `{u², uv, v², w}` in coefficient space.
    pub members_rank: usize,
    /// `u², uv, v²` all vanish at `(0:0:1)`.
    pub products_vanish_at_ninth_point: bool,
    /// `w(0, 0, 1)`.
    pub w_at_ninth_point: Scalar,
}

impl SexticSpace {
    pub const EXPECTED_DIMENSION: usize = 4;

    pub fn passes(&self) -> bool {
        self.dimension == Self::EXPECTED_DIMENSION
            && self.members.iter().all(|&m| m)
            && self.members_rank == Self::EXPECTED_DIMENSION
            && self.products_vanish_at_ninth_point
            && !self.w_at_ninth_point.is_zero()
    }
}

/// Rows contributed by one polynomial: the 8 coordinates of its value in `Q[t]/(h)`.
fn residue_column(ring: &QuotientRing, f: &TriPoly) -> Vec<Scalar> {
    let r = f.eval_param(ring).into_representative();
    (0..8).map(|i| r.coeff(i)).collect()
}

/// Builds the matrix whose column for monomial `m` stacks the residues of
/// each `op(m)`, and returns its kernel as forms.
fn solve_space(
    ring: &QuotientRing,
    degree: u32,
    conditions: &[fn(&TriPoly) -> TriPoly],
) -> Vec<TriPoly> {
    let monomials = Monomial::of_degree(degree);
    let columns: Vec<Vec<Scalar>> = monomials
        .iter()
        .map(|m| {
            let mono = TriPoly::term(crate::scalar::int(1), *m);
            conditions
                .iter()
                .flat_map(|op| residue_column(ring, &op(&mono)))
                .collect()
        })
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..columns[0].len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    Matrix::from_rows(&rows)
        .kernel()
        .into_iter()
        .map(|v| TriPoly::from_terms(monomials.iter().copied().zip(v)))
        .collect()
}

fn rank_of_forms(forms: &[&TriPoly], degree: u32) -> usize {
    let monomials = Monomial::of_degree(degree);
    let rows: Vec<Vec<Scalar>> = forms
        .iter()
        .map(|f| monomials.iter().map(|m| f.coeff(m)).collect())
        .collect();
    Matrix::from_rows(&rows).rank()
}

pub fn form_in_cubic_space(ring: &QuotientRing, f: &TriPoly) -> bool {
    f.is_homogeneous() && f.total_degree().map_or(true, |d| d == 3) && f.eval_param(ring).is_zero()
}

pub fn form_in_sextic_space(ring: &QuotientRing, f: &TriPoly) -> bool {
    f.is_homogeneous()
        && f.total_degree().map_or(true, |d| d == 6)
        && f.eval_param(ring).is_zero()
        && f.derivative(Var::X).eval_param(ring).is_zero()
        && f.derivative(Var::Y).eval_param(ring).is_zero()
}

/// Solves the 8 × 10 system `c(t³, t, 1) ≡ 0 mod h` on cubic coefficients.
pub fn cubic_space(seed: &SeedPoly, u: &TriPoly, v: &TriPoly) -> CubicSpace {
    let ring = seed.ring();
    let basis = solve_space(ring, 3, &[|f| f.clone()]);
    let ninth = Monomial::new(0, 0, 3);
    CubicSpace {
        dimension: basis.len(),
        vanishes_at_ninth_point: basis.iter().all(|b| b.coeff(&ninth).is_zero()),
        basis,
        contains_u: form_in_cubic_space(ring, u),
        contains_v: form_in_cubic_space(ring, v),
        uv_rank: rank_of_forms(&[u, v], 3),
    }
}

/// Solves the 24 × 28 system `F ≡ F_x ≡ F_y ≡ 0 mod h` (after `x = t³, y = t, z = 1`)
/// on sextic coefficients.
pub fn sextic_space(seed: &SeedPoly, u: &TriPoly, v: &TriPoly, w: &TriPoly) -> SexticSpace {
    let ring = seed.ring();
    let basis = solve_space(
        ring,
        6,
        &[
            |f| f.clone(),
            |f| f.derivative(Var::X),
            |f| f.derivative(Var::Y),
        ],
    );
    let uu = u * u;
    let uv = u * v;
    let vv = v * v;
    let ninth = Monomial::new(0, 0, 6);
    let members = [&uu, &uv, &vv, w].map(|f| form_in_sextic_space(ring, f));
    SexticSpace {
        dimension: basis.len(),
        basis,
        members,
        members_rank: rank_of_forms(&[&uu, &uv, &vv, w], 6),
        products_vanish_at_ninth_point: [&uu, &uv, &vv].iter().all(|f| f.coeff(&ninth).is_zero()),
        w_at_ninth_point: w.coeff(&ninth),
    }
}
