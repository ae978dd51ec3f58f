//! Exact symbolic computation on the generalized Weyl algebras `A(p;q)` and
//! `B(p;q)`: skew derivations, the three-dimensional first-order calculus,
//! the associated divergence and integral, and a Dirac operator with real
//! structure on the spinor bimodule.
//!
//! All coefficients live in `ℚ(q)` with `q` a formal parameter, so every
//! identity is checked exactly.

pub mod calculus;
pub mod derivations;
pub mod error;
mod fmt_util;
pub mod gwa;
pub mod integral;
pub mod scalars;
pub mod spin;
pub mod verify;

pub use error::{Error, Result};
pub use gwa::{AlgElem, AlgebraCtx, BElem};
pub use scalars::{Scalar, ZPoly};
