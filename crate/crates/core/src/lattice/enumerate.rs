use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar;

/// All `x` with `xᵀ G x = norm` for a negative-definite integer Gram `G`,
/// sorted lexicographically.
///
/// Fincke–Pohst over exact rationals; the interval for each coordinate is
/// found by stepping outward from the centre, so no square roots are taken.
pub fn enumerate_short_vectors(gram: &[Vec<i64>], norm: i64) -> Result<Vec<Vec<i64>>> {
    let n = gram.len();
    if gram.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("Gram matrix must be square"));
    }
    if norm > 0 {
        return Err(Error::InvalidArgument(
            "norm must be non-positive for a negative-definite form",
        ));
    }
    if norm == 0 || n == 0 {
        return Ok(Vec::new());
    }
    // Q(x) = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)² for the positive form −G.
    let mut q: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|&v| scalar::int(-v)).collect())
        .collect();
    for i in 0..n {
        if !q[i][i].is_positive() {
            return Err(Error::InvalidArgument(
                "Gram matrix is not negative definite",
            ));
        }
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let delta = &q[k][i] * &q[i][l];
                q[k][l] -= delta;
            }
        }
    }

    let target = -norm;
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    search(
        &q,
        gram,
        n - 1,
        scalar::int(target),
        target,
        &mut x,
        &mut out,
    );
    out.sort();
    Ok(out)
}

fn search(
    q: &[Vec<BigRational>],
    gram: &[Vec<i64>],
    i: usize,
    budget: BigRational,
    target: i64,
    x: &mut [i64],
    out: &mut Vec<Vec<i64>>,
) {
    let n = x.len();
    let mut centre = BigRational::zero();
    for j in i + 1..n {
        centre -= &q[i][j] * scalar::int(x[j]);
    }
    let cost = |xi: i64| {
        let diff = scalar::int(xi) - &centre;
        &q[i][i] * &diff * &diff
    };
    let base = centre.numer().div_floor(centre.denom());
    let base = i64::try_from(&base).expect("coordinate fits in i64");
    let visit = |xi: i64, x: &mut [i64], out: &mut Vec<Vec<i64>>| -> bool {
        let c = cost(xi);
        if c > budget {
            return false;
        }
        x[i] = xi;
        if i == 0 {
            if exact_norm(gram, x) == -target {
                out.push(x.to_vec());
            }
        } else {
            search(q, gram, i - 1, &budget - &c, target, x, out);
        }
        true
    };
    let mut xi = base;
    while visit(xi, x, out) {
        xi -= 1;
    }
    let mut xi = base + 1;
    while visit(xi, x, out) {
        xi += 1;
    }
    x[i] = 0;
}

fn exact_norm(gram: &[Vec<i64>], x: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, xi) in x.iter().enumerate() {
        for (j, xj) in x.iter().enumerate() {
            acc += xi * gram[i][j] * xj;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_hyperbolic, orth_complement};

    #[test]
    fn a2_roots() {
        let g = vec![vec![-2, 1], vec![1, -2]];
        assert_eq!(enumerate_short_vectors(&g, -2).unwrap().len(), 6);
    }

    #[test]
    fn e8_and_e7_roots() {
        for (d, count) in [(1, 240), (2, 126)] {
            let h = build_hyperbolic(d).unwrap();
            let c = orth_complement(&h.lattice, &h.omega).unwrap();
            let roots = enumerate_short_vectors(c.lattice.gram(), -2).unwrap();
            assert_eq!(roots.len(), count);
        }
    }

    #[test]
    fn rejects_indefinite() {
        let g = vec![vec![1, 0], vec![0, -1]];
        assert!(enumerate_short_vectors(&g, -2).is_err());
        assert!(enumerate_short_vectors(&g, 2).is_err());
    }
}
