//! Exact construction of the plane branch-curve model of a degree-1 Del Pezzo
//! surface, together with decision procedures for every finite claim the
//! construction rests on.
//!
//! The eight blown-up points are `B(h) = {(α³ : α : 1) : h(α) = 0}` for a
//! normalized octic `h` (monic, no `t⁷` term, nonzero constant term,
//! squarefree). All arithmetic is exact over `Q`; evaluation "at every point
//! of `B`" is carried out once in the quotient ring `Q[t]/(h)`.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Layout:
//! - [`scalar`], [`upoly`], [`tripoly`], [`quotient`], [`resultant`],
//!   [`finite_field`], [`linalg`]: the exact algebra substrate.
//! - [`seed`] and [`curve`]: the branch-curve pipeline and its verification.
//! - [`position`] and [`galois`]: general position and Galois certificates.
//! - [`lattice`]: the `I^{1,9-d}` / `E8` / mod-2 lattice checks.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod curve;
pub mod error;
pub mod finite_field;
pub mod galois;
pub mod lattice;
pub mod linalg;
pub mod position;
pub mod quotient;
pub mod resultant;
pub mod scalar;
pub mod seed;
pub mod tripoly;
pub mod upoly;

pub use error::{Error, SeedError};
pub use quotient::{QuotElem, QuotientRing};
pub use scalar::Scalar;
pub use seed::SeedPoly;
pub use tripoly::{Monomial, TriPoly, Var};
pub use upoly::UniPoly;
