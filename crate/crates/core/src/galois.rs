//! One-sided certificates that the Galois group of a seed contains `A₈`.
//!
//! A factorization pattern `{8}` modulo a good prime proves irreducibility
//! over `Q`, hence transitivity. A pattern containing a part 5 (the other
//! parts sum to 3, so are coprime to 5) yields a genuine 5-cycle as a power
//! of Frobenius. A transitive group of degree 8 containing a 5-cycle is
//! primitive, and a primitive group containing a `p`-cycle with
//! `p ≤ n − 3` contains `A_n` (Jordan). The discriminant's square class then
//! separates `A₈` from `S₈`.

use alloc::vec::Vec;

use crate::finite_field::{ddf_degree_multiset, primes_up_to, CycleType};
use crate::resultant::discriminant;
use crate::scalar::{self, Scalar};
use crate::seed::SeedPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaloisVerdict {
    S8Certified,
    A8Certified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub discriminant: Scalar,
    pub disc_is_square: bool,
    /// First prime with cycle type `{8}`.
    pub transitivity_prime: Option<u64>,
    /// First prime whose cycle type has a part equal to 5.
    pub five_cycle_prime: Option<u64>,
    /// Cycle types recorded, ascending by prime.
    pub sampled_types: Vec<CycleType>,
    /// Primes skipped (bad reduction or not squarefree mod `p`).
    pub skipped_primes: Vec<u64>,
    pub verdict: GaloisVerdict,
}

impl GaloisCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict != GaloisVerdict::Inconclusive
    }
}

/// Samples primes `p ≤ prime_bound` in ascending order until both witnesses
/// are found or the primes run out.
pub fn certify_galois(seed: &SeedPoly, prime_bound: u64) -> GaloisCertificate {
    let h = seed.poly();
    let disc = discriminant(h).expect("degree 8");
    let disc_is_square = scalar::rational_is_square(&disc);
    let mut cert = GaloisCertificate {
        discriminant: disc.clone(),
        disc_is_square,
        transitivity_prime: None,
        five_cycle_prime: None,
        sampled_types: Vec::new(),
        skipped_primes: Vec::new(),
        verdict: GaloisVerdict::Inconclusive,
    };
    for p in primes_up_to(prime_bound) {
        if cert.transitivity_prime.is_some() && cert.five_cycle_prime.is_some() {
            break;
        }
        let divides_disc = scalar::reduce_mod_prime(&disc, p).map_or(true, |r| r == 0);
        let ct = if divides_disc {
            None
        } else {
            ddf_degree_multiset(h, p)
        };
        let Some(ct) = ct else {
            cert.skipped_primes.push(p);
            continue;
        };
        if ct.parts == [8] && cert.transitivity_prime.is_none() {
            cert.transitivity_prime = Some(p);
        }
        if ct.contains(5) && cert.five_cycle_prime.is_none() {
            cert.five_cycle_prime = Some(p);
        }
        cert.sampled_types.push(ct);
    }
    if cert.transitivity_prime.is_some() && cert.five_cycle_prime.is_some() {
        cert.verdict = if disc_is_square {
            GaloisVerdict::A8Certified
        } else {
            GaloisVerdict::S8Certified
        };
    }
    cert
}
