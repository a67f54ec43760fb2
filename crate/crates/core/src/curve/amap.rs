//! The substitution `t^{3i+j} ↦ x^i y^j` (`j < 3`), a section of evaluation
//! along the cuspidal cubic `x = y³`.

use crate::tripoly::{Monomial, TriPoly};
use crate::upoly::UniPoly;

/// `A(g)`: bivariate polynomial `G` with `G(t³, t) = g(t)` and
/// `G(x, y) − g(y)` divisible by `x − y³`.
pub fn amap(g: &UniPoly) -> TriPoly {
    TriPoly::from_terms(g.coeffs().iter().enumerate().map(|(e, c)| {
        let e = e as u32;
        (Monomial::new(e / 3, e % 3, 0), c.clone())
    }))
}

/// Quotient `(G(x, y) − g(y)) / (x − y³)` as a polynomial in `x, y`.
///
/// Used to certify the divisibility claim exactly: each monomial
/// `x^i y^j − y^{3i+j} = (x − y³) · Σ_{k<i} x^k y^{3(i−1−k)+j}`.
pub fn amap_cofactor(g: &UniPoly) -> TriPoly {
    let mut out = TriPoly::zero();
    for (e, c) in g.coeffs().iter().enumerate() {
        let (i, j) = ((e / 3) as u32, (e % 3) as u32);
        for k in 0..i {
            out.add_term(Monomial::new(k, 3 * (i - 1 - k) + j, 0), c.clone());
        }
    }
    out
}

/// `g(y)` as a bivariate polynomial.
pub fn in_y(g: &UniPoly) -> TriPoly {
    TriPoly::from_terms(
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(e, c)| (Monomial::new(0, e as u32, 0), c.clone())),
    )
}

/// `x − y³`.
pub fn cusp_affine() -> TriPoly {
    TriPoly::from_terms([
        (Monomial::new(1, 0, 0), crate::scalar::int(1)),
        (Monomial::new(0, 3, 0), -crate::scalar::int(1)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let mut c = [0i64; 10];
        c[9] = 1;
        assert_eq!(
            amap(&UniPoly::from_ints(&c)),
            TriPoly::from_int_terms(&[([3, 0, 0], 1)])
        );

        // t·(t⁸ − t − 1) = t⁹ − t² − t ↦ x³ − y² − y
        let th = UniPoly::from_ints(&[0, -1, -1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            amap(&th),
            TriPoly::from_int_terms(&[([3, 0, 0], 1), ([0, 2, 0], -1), ([0, 1, 0], -1)])
        );

        let h = UniPoly::from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            amap(&(&h * &h)),
            TriPoly::from_int_terms(&[
                ([5, 1, 0], 1),
                ([3, 0, 0], -2),
                ([2, 2, 0], -2),
                ([0, 2, 0], 1),
                ([0, 1, 0], 2),
                ([0, 0, 0], 1),
            ])
        );
    }

    #[test]
    fn cofactor_identity() {
        let g = UniPoly::from_ints(&[4, -1, 0, 2, 5, 0, 0, 1, 3, -2, 0, 7]);
        let lhs = &amap(&g) - &in_y(&g);
        let rhs = &cusp_affine() * &amap_cofactor(&g);
        assert_eq!(lhs, rhs);
        assert_eq!(amap(&g).param_poly(), g);
    }
}
