//! Integer lattices: `I^{1,9−d}`, the canonical vector `ω`, its orthogonal
//! complement (the `E_{9−d}` root lattice with reversed sign), the permutation
//! action on the exceptional classes, and the mod-2 checks built on them.

mod checks;
mod enumerate;
mod f2;

pub use checks::{
    check_pairing_tuple, exhaustive_linalg_check, f8s_iso_check, mod2_quadratic_census,
    picard_model_check, random_linalg_check, random_tuples_check, CensusReport, F8sReport,
    LinalgSummary, PicardReport, TupleOutcome,
};
pub use enumerate::enumerate_short_vectors;
pub use f2::{f2_rank, F2Space};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Integer coordinates with respect to a lattice basis.
pub type LatticeVector = Vec<i64>;

/// A free `Z`-module with a symmetric integer Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    gram: Vec<Vec<i64>>,
    labels: Vec<String>,
}

impl IntLattice {
    pub fn new(gram: Vec<Vec<i64>>, labels: Vec<String>) -> Result<Self> {
        let n = gram.len();
        if labels.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(
                "Gram matrix must be square and labelled",
            ));
        }
        if !(0..n).all(|i| (0..i).all(|j| gram[i][j] == gram[j][i])) {
            return Err(Error::InvalidArgument("Gram matrix must be symmetric"));
        }
        Ok(Self { gram, labels })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                acc += ai * self.gram[i][j] * bj;
            }
        }
        acc
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.pair(a, a)
    }

    pub fn determinant(&self) -> i64 {
        determinant(&self.gram)
    }

    /// Every vector has even self-pairing.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant fits in i64")
}

/// `I^{1,9−d}` together with `ω = −3e₀ + e₁ + … + e_{9−d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicLattice {
    pub d: u32,
    pub lattice: IntLattice,
    pub omega: LatticeVector,
}

pub fn build_hyperbolic(d: u32) -> Result<HyperbolicLattice> {
    if d != 1 && d != 2 {
        return Err(Error::InvalidArgument("d must be 1 or 2"));
    }
    let n = 10 - d as usize;
    let gram = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i != j {
                        0
                    } else if i == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .collect()
        })
        .collect();
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    let mut omega = vec![1; n];
    omega[0] = -3;
    Ok(HyperbolicLattice {
        d,
        lattice: IntLattice::new(gram, labels)?,
        omega,
    })
}

/// The sublattice orthogonal to a vector, with its basis in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub lattice: IntLattice,
    pub basis: Vec<LatticeVector>,
}

impl Complement {
    /// Ambient coordinates of a vector given in complement coordinates.
    pub fn to_ambient(&self, coords: &[i64]) -> LatticeVector {
        let n = self.basis.first().map_or(0, Vec::len);
        let mut out = vec![0; n];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (o, bi) in out.iter_mut().zip(b) {
                *o += c * bi;
            }
        }
        out
    }
}

/// Basis of `{x : (x, v) = 0}` by unimodular column reduction of the functional `(·, v)`.
pub fn orth_complement(lat: &IntLattice, v: &[i64]) -> Result<Complement> {
    let n = lat.rank();
    if v.len() != n {
        return Err(Error::InvalidArgument(
            "vector length differs from the lattice rank",
        ));
    }
    if v.iter().fold(0i64, |g, &c| g.gcd(&c)) != 1 {
        return Err(Error::InvalidArgument("vector is not primitive"));
    }
    if lat.norm(v) == 0 {
        return Err(Error::InvalidArgument("vector is isotropic"));
    }
    let mut func: Vec<i64> = (0..n)
        .map(|j| (0..n).map(|i| v[i] * lat.gram[i][j]).sum())
        .collect();
    // Columns of `u` track the unimodular change of basis.
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| func[j] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let pivot = *nonzero
            .iter()
            .min_by_key(|&&j| func[j].abs())
            .expect("nonempty");
        for &j in &nonzero {
            if j == pivot {
                continue;
            }
            let q = Integer::div_floor(&func[j], &func[pivot]);
            func[j] -= q * func[pivot];
            for row in u.iter_mut() {
                row[j] -= q * row[pivot];
            }
        }
    }
    let basis: Vec<LatticeVector> = (0..n)
        .filter(|&j| func[j] == 0)
        .map(|j| u.iter().map(|row| row[j]).collect())
        .collect();
    let gram = basis
        .iter()
        .map(|a| basis.iter().map(|b| lat.pair(a, b)).collect())
        .collect();
    let labels = (0..basis.len()).map(|i| format!("b{i}")).collect();
    Ok(Complement {
        lattice: IntLattice::new(gram, labels)?,
        basis,
    })
}

/// A permutation `τ` of `{1, …, n}` stored 0-based: `images[i] = τ(i+1) − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument("not a permutation"));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The transposition of two 1-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Self { images }
    }

    /// `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

/// The isometry `μ(τ)`: `e₀ ↦ e₀`, `eᵢ ↦ e_{τ(i)}`, as a matrix acting on columns.
pub fn perm_isometry(tau: &Permutation) -> Vec<Vec<i64>> {
    let n = tau.len() + 1;
    let mut m = vec![vec![0; n]; n];
    m[0][0] = 1;
    for i in 0..tau.len() {
        m[tau.apply(i) + 1][i + 1] = 1;
    }
    m
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().enumerate().map(|(k, x)| x * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `Mᵀ G M = G`.
pub fn is_isometry(lat: &IntLattice, m: &[Vec<i64>]) -> bool {
    let n = lat.rank();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| m.iter().map(|r| r[j]).collect()).collect();
    (0..n).all(|i| (0..n).all(|j| lat.pair(&cols[i], &cols[j]) == lat.gram[i][j]))
}
