//! The construction for `h = t⁸ − t − 1`, frozen from the sympy oracle in
//! `fixtures/curve_oracle.py`.

use bertini_core::curve::{
    build_w, check_identities, cubic_space, kth_root, multiplicity_report, perfect_power_dichotomy,
    sextic_space, verify, CurveBundle, MultiplicityVerdict, PowerVerdict,
};
use bertini_core::scalar;
use bertini_core::{Monomial, SeedPoly, TriPoly, UniPoly};

fn seed() -> SeedPoly {
    SeedPoly::from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0, 1]).unwrap()
}

fn form(terms: &[([u32; 3], i64)]) -> TriPoly {
    TriPoly::from_int_terms(terms)
}

/// Terms in grlex-descending order, as the oracle prints them.
fn listing(f: &TriPoly) -> Vec<([u32; 3], String)> {
    f.terms_desc().map(|(m, c)| (m.0, c.to_string())).collect()
}

#[test]
fn forms_match_oracle() {
    let b = CurveBundle::build(&seed());
    assert_eq!(b.u, form(&[([1, 0, 2], 1), ([0, 3, 0], -1)]));
    assert_eq!(
        b.v,
        form(&[([3, 0, 0], 1), ([0, 2, 1], -1), ([0, 1, 2], -1)])
    );
    assert_eq!(
        b.w,
        form(&[
            ([5, 1, 0], 1),
            ([3, 0, 3], -1),
            ([2, 3, 1], -1),
            ([2, 2, 2], -3),
            ([1, 5, 0], 1),
            ([0, 2, 4], 1),
            ([0, 1, 5], 2),
            ([0, 0, 6], 1),
        ])
    );
    let q = [
        ([8, 0, 1], 6),
        ([5, 2, 2], -24),
        ([5, 1, 3], -24),
        ([4, 5, 0], 6),
        ([4, 4, 1], 6),
        ([3, 1, 5], 6),
        ([3, 0, 6], 9),
        ([2, 4, 3], 18),
        ([2, 3, 4], 45),
        ([2, 2, 5], 36),
        ([1, 7, 1], -6),
        ([1, 6, 2], -21),
        ([1, 5, 3], -24),
        ([0, 9, 0], 3),
        ([0, 8, 1], 6),
        ([0, 3, 6], -6),
        ([0, 2, 7], -18),
        ([0, 1, 8], -18),
        ([0, 0, 9], -6),
    ];
    assert_eq!(b.q, form(&q));
    let expected: Vec<([u32; 3], String)> = q.iter().map(|(e, c)| (*e, c.to_string())).collect();
    assert_eq!(listing(&b.q), expected);
}

#[test]
fn intermediate_parts_match_oracle() {
    let parts = build_w(&seed());
    assert_eq!(parts.p, UniPoly::from_ints(&[0, 0, 0, 0, 0, 1, -1]));
    assert_eq!(parts.g, form(&[([1, 2, 0], 1), ([2, 0, 0], -1)]));
    assert_eq!(
        parts.h,
        form(&[
            ([5, 1, 0], 1),
            ([1, 5, 0], 1),
            ([2, 3, 0], -1),
            ([2, 2, 0], -3),
            ([3, 0, 0], -1),
            ([0, 2, 0], 1),
            ([0, 1, 0], 2),
            ([0, 0, 0], 1),
        ])
    );
    assert_eq!(parts.w.coeff(&Monomial::new(0, 0, 6)), scalar::int(1));
}

#[test]
fn full_verification_passes() {
    let b = CurveBundle::build(&seed());
    assert!(check_identities(&b).passes());
    let r = verify(&b);
    assert!(r.passes(), "{r:#?}");
    assert_eq!(r.genus, Some(4));
    assert_eq!(r.cubic_space.dimension, 2);
    assert_eq!(r.sextic_space.dimension, 4);
    assert_eq!(r.perfect_power.verdict, PowerVerdict::Neither);
}

#[test]
fn spaces_for_trinomial() {
    let s = seed();
    let b = CurveBundle::build(&s);
    let c = cubic_space(&s, &b.u, &b.v);
    assert!(c.passes() && c.contains_u && c.contains_v);
    let x = sextic_space(&s, &b.u, &b.v, &b.w);
    assert!(x.passes());
    assert_eq!(x.members, [true; 4]);
}

#[test]
fn multiplicity_controls() {
    let s = seed();
    let b = CurveBundle::build(&s);
    let ring = s.ring();
    // A smooth curve through B has multiplicity 1, so its cube has multiplicity exactly 3.
    assert_eq!(
        multiplicity_report(&b.u.pow(3), ring).verdict,
        MultiplicityVerdict::Exactly3
    );
    assert!(matches!(
        multiplicity_report(&b.u.pow(4), ring).verdict,
        MultiplicityVerdict::Above { .. }
    ));
    assert!(matches!(
        multiplicity_report(&(&b.u.pow(2) * &b.v.pow(2)), ring).verdict,
        MultiplicityVerdict::Above { .. }
    ));
    assert_eq!(
        multiplicity_report(&b.w, ring).verdict,
        MultiplicityVerdict::Below { order: 2 }
    );
    assert_eq!(
        multiplicity_report(&TriPoly::one(), ring).verdict,
        MultiplicityVerdict::Below { order: 0 }
    );
}

#[test]
fn dichotomy_controls() {
    let b = CurveBundle::build(&seed());
    let l = form(&[([1, 0, 0], 2), ([0, 1, 0], -1), ([0, 0, 1], 3)]);
    assert_eq!(
        perfect_power_dichotomy(&l.pow(9).scale(&scalar::int(-5))).verdict,
        PowerVerdict::NinthPowerOfLinear
    );
    assert_eq!(
        perfect_power_dichotomy(&b.v.pow(3)).verdict,
        PowerVerdict::CubeOfCubic
    );
    assert_eq!(kth_root(&b.v.pow(3), 3).unwrap(), b.v);
    assert_eq!(perfect_power_dichotomy(&b.q).verdict, PowerVerdict::Neither);
}
