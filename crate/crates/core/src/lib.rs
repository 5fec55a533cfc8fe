//! Exact and rigorous arbitrary-precision machinery for the reflection
//! values `f(x) = log Γ(x) + log Γ(1 − x)` at rational `x` in (0, 1).
//!
//! * [`qcore`]: reduced rationals and outward-rounded interval arithmetic.
//! * [`algebraic`]: cyclotomic polynomials and minimal polynomials of `sin(πx)`.
//! * [`gammaeval`]: log Γ, log π, `f`, `f′`, and reflection residuals.
//! * [`periods`]: Baker periods, exact nullity and numeric separation.
//! * [`theorems`]: exception-set analysis and the π·e implication.

pub mod algebraic;
pub mod error;
pub mod gammaeval;
pub mod json;
pub mod periods;
pub mod qcore;
pub mod theorems;

pub use error::{Error, Result};
