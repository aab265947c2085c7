//! Positivity analysis for generalized hypergeometric functions of the form
//! ₁F₂(a; b, c; −x²/4) and the Bessel integrals they normalize.
//!
//! The crate provides, bottom to top:
//!
//! - [`series`]: Pochhammer symbols, infinite ₚF_q sums with a cancellation
//!   budget, terminating sums (plus an exact-rational mode in [`exact`]);
//! - [`identities`]: Saalschütz summation, the Whipple transform Θ_n ↔ Ω_n,
//!   and sign certification of the Saalschützian ₄F₃ family;
//! - [`bessel`]: J_α / 𝕁_α evaluation, positive zeros, interlacing;
//! - [`regions`]: exact inequality classifiers for every positivity region
//!   in the (b, c) and (α, β) parameter planes, and grid emission;
//! - [`expansion`]: the sums-of-squares Bessel expansion of Φ with its
//!   terminating ₄F₃ coefficients;
//! - [`roots`]: the threshold functionals A(β), G(α), the transcendental
//!   roots β(α), ᾱ, and the β(α) comparison table;
//! - [`verify`]: seeded, reproducible identity/positivity suites.
//!
//! Everything is a pure function of its arguments; values are immutable
//! after construction and safe to share across threads.

pub mod bessel;
pub mod dd;
pub mod error;
pub mod exact;
pub mod expansion;
pub mod gamma;
pub mod identities;
pub mod quad;
pub mod regions;
pub mod roots;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
