//! Integer factorization toolkit.
//!
//! Three reformulations of the factoring problem for a semiprime `n = p*q`,
//! alongside the classical baselines they are benchmarked against:
//!
//! 1. **Rectangle / triangular-number view** ([`rpv`]) — every prime above 3
//!    is `6x ± 1`, so `n` is the area of a rectangle with 6k±1 sides; when
//!    `8n + 1` is a perfect square the factorization falls out of the
//!    quadratic formula in a handful of big-integer operations.
//! 2. **Matrix decomposition view** ([`mdpv`]) — `n` is realized as the
//!    determinant of a 2x2 integer matrix `N` and the factoring problem
//!    becomes `N = P*Q` with `det P * det Q = n`, attacked with Buchberger's
//!    algorithm over an 8-variable polynomial ring and with an eigenvalue
//!    shortcut.
//! 3. **Algebraic-form view** ([`mafpv`]) — `n` is a value of one of the four
//!    bivariate forms `36xy ± 6(x ± y) ± 1`, and factoring becomes a small-root
//!    search: an exhaustive oracle plus a lattice solver in the Coppersmith
//!    style, backed by exact-arithmetic LLL ([`lattice`]).
//!
//! [`classical`] holds the baselines (trial division, Fermat, Pollard rho,
//! Pollard p-1, affine ECM) and [`dispatch`] the strategy that the CLI's
//! `auto` method uses.
//!
//! All arithmetic is exact: big integers everywhere, exact rationals inside
//! the Groebner and LLL engines, no floating point on any code path.

pub mod arith;
pub mod classical;
pub mod dispatch;
pub mod lattice;
pub mod mafpv;
pub mod mdpv;
pub mod rpv;

pub use classical::{FactorResult, Status};
