//! Exact-arithmetic algebra of cyclic words over a symplectic vector space.
//!
//! The crate works in the free associative algebra `T(H)` on generators
//! `x_1..x_g, y_1..y_g, z_1..z_n` (weights 1, 1, 2), its trace space `|T(H)|`
//! of cyclic words, and the quotient `T(H)_ω` by the two-sided ideal of the
//! symplectic element `ω = Σ [x_i, y_i] + Σ z_j`. On top of that it provides
//!
//! - a confluent rewriting system on cyclic words with an irregularity
//!   termination measure, loop holonomies and a normal form onto a canonical
//!   basis of `|T(H)_ω|` ([`rewrite`]);
//! - reduced-coproduct kernels of the trace spaces in both the free and the
//!   quotient model ([`hopfkernel`]);
//! - divergence cocycles, the necklace Lie bracket, the graded Turaev
//!   cobracket and membership tests for Kashiwara-Vergne type Lie algebras
//!   ([`kvdiv`]);
//! - verification suites reproducing all of the above as machine-checkable
//!   reports ([`verify`]).
//!
//! All coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere.

pub mod context;
pub mod exactlin;
pub mod freetensor;
pub mod hopfkernel;
pub mod kvdiv;
pub mod omega;
pub mod rewrite;
pub mod scalar;
pub mod traces;
pub mod verify;

pub use context::Context;
pub use scalar::Scalar;
