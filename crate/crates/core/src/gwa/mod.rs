//! Normal-form arithmetic in `A(p;q)` and `B(p;q)`.
//!
//! `A(p;q)` is generated by `x_±, z_±` with commuting `z_±`,
//! `x_+z_± = q⁻¹z_±x_+`, `x_-z_± = q z_±x_-`, `x_+x_- = p(z)` and
//! `x_-x_+ = p(q²z)` where `z = z_+z_-`. `B(p;q)` is generated by `x, y, z`
//! with `xz = q²zx`, `yz = q⁻²zy`, `xy = q²z p(q²z)`, `yx = z p(z)`.
//! Basis monomials keep the x-block left of the z-block.

mod ctx;
mod elem;
mod monomial;
pub mod rewrite;
pub mod sample;

pub use ctx::{AlgebraCtx, XBlock, XProduct};
pub use elem::{theta, theta_inverse, AlgElem, BElem, Element};
pub use monomial::{
    a_basis, a_basis_of_degree, b_basis, AMonomial, BMonomial, Monomial, Shape, XSign, XYSign,
};
pub use rewrite::{Gen, Strategy};
