//! Exact coefficient arithmetic: the field `ℚ(q)`, polynomials in the central
//! variable `z`, q-derivatives, separability tests and Bézout certificates.

pub(crate) mod laurent;
mod qpoly;
mod scalar;
mod sign;
mod zpoly;

pub use qpoly::QPoly;
pub use scalar::{q_integer, specialize_guarded, Scalar};
pub use sign::sign_on_unit_interval;
pub use zpoly::{is_q2_separable, q2_separability, SeparabilityCertificate, ZPoly};
