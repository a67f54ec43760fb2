//! Multiplicity of a plane curve at the points of `B(h)`, decided in `Q[t]/(h)`.
//!
//! A form has multiplicity `≥ k` at a point iff all partials of order `< k`
//! vanish there. All order-`≤ 2` partials vanishing modulo `h` gives
//! multiplicity `≥ 3` at every root at once. Multiplicity is exactly 3 at
//! every root iff no root is a common zero of the order-3 partials, i.e.
//! `gcd(h, order-3 representatives) = 1`.

use alloc::vec::Vec;

use crate::quotient::QuotientRing;
use crate::tripoly::TriPoly;
use crate::upoly::UniPoly;

/// Exponent triples `(a, b, c)` with `a + b + c = order`, descending.
fn partial_orders(order: u32) -> Vec<[u32; 3]> {
    crate::tripoly::Monomial::of_degree(order)
        .into_iter()
        .map(|m| m.0)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderVanishing {
    pub order: u32,
    pub all_vanish: bool,
    /// First partial (by derivative orders) with a nonzero residue, and that residue.
    pub witness: Option<([u32; 3], UniPoly)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiplicityVerdict {
    /// Some partial of this order is nonzero at some point of `B`.
    Below {
        order: u32,
    },
    Exactly3,
    /// A point of `B` (a root of the carried gcd) has multiplicity `≥ 4`.
    Above {
        gcd: UniPoly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub orders: Vec<OrderVanishing>,
    /// Monic `gcd(h, representatives of all order-3 partials)`.
    pub order3_gcd: UniPoly,
    pub verdict: MultiplicityVerdict,
}

impl MultiplicityReport {
    pub fn passes(&self) -> bool {
        self.verdict == MultiplicityVerdict::Exactly3
    }
}

pub fn multiplicity_report(form: &TriPoly, ring: &QuotientRing) -> MultiplicityReport {
    let mut orders = Vec::new();
    let mut below = None;
    for order in 0..=2 {
        let mut witness = None;
        for orders_abc in partial_orders(order) {
            let r = form
                .partial(orders_abc)
                .eval_param(ring)
                .into_representative();
            if !r.is_zero() {
                witness = Some((orders_abc, r));
                break;
            }
        }
        if witness.is_some() && below.is_none() {
            below = Some(order);
        }
        orders.push(OrderVanishing {
            order,
            all_vanish: witness.is_none(),
            witness,
        });
    }
    let order3_gcd = partial_orders(3)
        .into_iter()
        .fold(ring.modulus().monic(), |g, abc| {
            if g.is_one() {
                return g;
            }
            let r = form.partial(abc).eval_param(ring).into_representative();
            UniPoly::gcd(&g, &r)
        });
    let verdict = match below {
        Some(order) => MultiplicityVerdict::Below { order },
        None if order3_gcd.is_one() => MultiplicityVerdict::Exactly3,
        None => MultiplicityVerdict::Above {
            gcd: order3_gcd.clone(),
        },
    };
    MultiplicityReport {
        orders,
        order3_gcd,
        verdict,
    }
}
