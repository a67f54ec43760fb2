//! Distinct-degree factorization against trial division by every monic
//! polynomial of degree ≤ 4, with arithmetic written independently here.

use bertini_core::finite_field::ddf_degree_multiset;
use bertini_core::UniPoly;
use proptest::prelude::*;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).unwrap()
}

/// Remainder and quotient of `a` by monic `b`.
fn divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![], trim(r));
    }
    let mut q = vec![0; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p * p - c * bj % p) % p;
        }
    }
    (trim(q), trim(r))
}

fn monic_of_degree(d: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(d as u32)).map(move |mut n| {
        let mut c: Vec<u64> = (0..d)
            .map(|_| {
                let digit = n % p;
                n /= p;
                digit
            })
            .collect();
        c.push(1);
        c
    })
}

/// Factor degrees by trial division, or `None` if a repeated factor appears.
fn brute_force(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let lc_inv = inv(*f.last().unwrap(), p);
    let mut rest: Vec<u64> = f.iter().map(|c| c * lc_inv % p).collect();
    let mut parts = Vec::new();
    for d in 1..=4 {
        for g in monic_of_degree(d, p) {
            loop {
                if rest.len() <= d {
                    break;
                }
                let (q, r) = divmod(&rest, &g, p);
                if !r.is_empty() {
                    break;
                }
                if divmod(&q, &g, p).1.is_empty() {
                    return None;
                }
                parts.push(d);
                rest = q;
            }
        }
    }
    if rest.len() > 1 {
        // No factor of degree ≤ 4 and degree ≤ 8: irreducible.
        parts.push(rest.len() - 1);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn ddf_matches_trial_division(
        coeffs in prop::collection::vec(-20i64..=20, 2..=8),
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
    ) {
        let mut c = coeffs;
        c.push(1);
        let reduced: Vec<u64> = c.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        let expected = brute_force(&reduced, p);
        let got = ddf_degree_multiset(&UniPoly::from_ints(&c), p).map(|t| t.parts);
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn trinomial_patterns() {
    let h = UniPoly::from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0, 1]);
    for p in [2u64, 3, 5, 7, 11, 13] {
        let reduced: Vec<u64> = h
            .to_integers()
            .unwrap()
            .iter()
            .map(|x| {
                let r = x % num_bigint::BigInt::from(p);
                let r = if r < num_bigint::BigInt::from(0) {
                    r + p
                } else {
                    r
                };
                u64::try_from(r).unwrap()
            })
            .collect();
        assert_eq!(
            ddf_degree_multiset(&h, p).map(|t| t.parts),
            brute_force(&reduced, p),
            "p = {p}"
        );
    }
}
