//! Exact coloured Jones polynomials of framed braid closures and level-N
//! Witten–Reshetikhin–Turaev invariants.
//!
//! - [`qpoly`], [`laurent`], [`cyclotomic`]: exact coefficient rings
//!   (`Z[q^{±1/2}]`, multivariate Laurent polynomials, `Q(ζ_{4N})`).
//! - [`braid`]: braid words, closure components, linking data, inertia.
//! - [`quantum_rep`]: the `U_q(sl_2)` braid representation and the coloured
//!   Jones state sum over weight multi-indices.
//! - [`intersection`]: intersection-pairing data and its local system.
//! - [`wrt`]: `τ_N` by the regrouped state sum and by the Kirby-colour sum.
//! - [`corpus`], [`runner`], [`float_check`]: corpus files, the command
//!   runner behind the `quantinv` binary, and the floating-point oracle.

// Dense matrix code reads more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod braid;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod float_check;
pub mod intersection;
pub mod laurent;
pub mod qpoly;
pub mod quantum_rep;
pub mod runner;
pub mod wrt;
