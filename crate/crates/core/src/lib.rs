//! Exact-arithmetic tools for bounding the minimum distance of cyclic codes.
//!
//! A cyclic code of length `n` over `F_q` whose defining set contains `T`
//! has minimum distance greater than `t` whenever the projective variety
//! `V(T, t)` (the common zeros of the Schur-type quotients
//! `f[U] = Δ[U] / Δ_t`, `U ⊆ T`, `|U| = t`) has no point whose coordinates
//! are distinct powers of a primitive `n`-th root of unity. This crate
//! builds those polynomials exactly, enumerates the varieties over finite
//! fields, and produces such certificates alongside the classical BCH and
//! Hartmann–Tzeng bounds.
//!
//! Modules:
//! - [`gf`]: finite fields `GF(p^m)` with deterministic construction.
//! - [`mpoly`]: sparse multivariate polynomials over the integers.
//! - [`vandermonde`]: `Δ[U]`, `f[U]` and the bivariate `F_r` family.
//! - [`variety`]: point enumeration and root-of-unity certificates.
//! - [`codes`]: cyclic codes and the bound suite.

pub mod arith;
pub mod codes;
pub mod combinat;
mod error;
pub mod gf;
pub mod linalg;
pub mod mpoly;
pub mod vandermonde;
pub mod variety;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use mpoly::MultiPoly;
pub use vandermonde::ExponentSet;

use serde::{Deserialize, Serialize};

/// Size limits applied to every enumeration. Exceeding any of them is an
/// error; nothing is silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Largest field order `p^m` that may be constructed.
    pub field: u64,
    /// Largest number of projective points to enumerate.
    pub points: u64,
    /// Largest number of exponent tuples to test in a certificate.
    pub tuples: u64,
    /// Largest number of messages `q^k` for brute-force distance.
    pub messages: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            field: 1 << 31,
            points: 10_000_000,
            tuples: 10_000_000,
            messages: 1 << 24,
        }
    }
}
