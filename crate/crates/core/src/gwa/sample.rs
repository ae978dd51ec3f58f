//! Random elements and words for property checks and benchmarks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::ctx::AlgebraCtx;
use super::elem::{AlgElem, BElem};
use super::monomial::{a_basis, a_basis_of_degree, b_basis, AMonomial, BMonomial};
use super::rewrite::Gen;
use crate::scalars::{QPoly, Scalar};

/// A small nonzero scalar: mostly Laurent monomials and binomials in `q`,
/// occasionally a genuine fraction.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let k = rng.gen_range(-3..=3);
    let a = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    match rng.gen_range(0..10) {
        0..=4 => Scalar::from_int(a).mul_q_pow(k),
        5..=7 => {
            let b = rng.gen_range(-2i64..=2);
            let s = Scalar::from_int(a) + Scalar::from_int(b).mul_q_pow(rng.gen_range(1..=3));
            if s.is_zero() {
                Scalar::one()
            } else {
                s.mul_q_pow(k)
            }
        }
        _ => {
            let num = QPoly::from_i64s(&[a, rng.gen_range(-2..=2)]);
            let den = QPoly::from_i64s(&[1, 0, *[-1i64, 1].choose(rng).unwrap()]);
            Scalar::from_polys(num, den)
                .unwrap_or_else(|_| Scalar::one())
                .mul_q_pow(k)
        }
    }
}

/// A random element with up to `terms` monomials of word length `≤ max_len`.
pub fn a_elem<R: Rng + ?Sized>(
    ctx: &Arc<AlgebraCtx>,
    rng: &mut R,
    terms: usize,
    max_len: u32,
) -> AlgElem {
    let basis = a_basis(max_len);
    AlgElem::from_terms(
        ctx,
        (0..terms).map(|_| (*basis.choose(rng).unwrap(), scalar(rng))),
    )
}

/// A random homogeneous element of the given degree.
pub fn a_homogeneous<R: Rng + ?Sized>(
    ctx: &Arc<AlgebraCtx>,
    rng: &mut R,
    degree: i64,
    terms: usize,
    max_len: u32,
) -> AlgElem {
    let basis = a_basis_of_degree(degree, max_len);
    AlgElem::from_terms(
        ctx,
        (0..terms).map(|_| (*basis.choose(rng).unwrap(), scalar(rng))),
    )
}

/// A random element of `B(p;q)`.
pub fn b_elem<R: Rng + ?Sized>(
    ctx: &Arc<AlgebraCtx>,
    rng: &mut R,
    terms: usize,
    max_len: u32,
) -> BElem {
    let basis = b_basis(max_len);
    BElem::from_terms(
        ctx,
        (0..terms).map(|_| (*basis.choose(rng).unwrap(), scalar(rng))),
    )
}

/// Exactly `terms` distinct monomials with every exponent `≤ max_exp` and
/// Laurent-monomial coefficients.
pub fn a_elem_dense<R: Rng + ?Sized>(
    ctx: &Arc<AlgebraCtx>,
    rng: &mut R,
    terms: usize,
    max_exp: u32,
) -> AlgElem {
    let mut out = AlgElem::zero(ctx);
    let e = max_exp as i32;
    while out.len() < terms {
        let m = AMonomial::new(
            rng.gen_range(-e..=e),
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
        );
        let c = Scalar::from_int(rng.gen_range(1..=9)).mul_q_pow(rng.gen_range(-3..=3));
        out = out + AlgElem::monomial(ctx, m, c);
    }
    out
}

/// A random word of length in `1..=max_len` over `alphabet`.
pub fn word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[Gen], max_len: usize) -> Vec<Gen> {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| *alphabet.choose(rng).unwrap()).collect()
}

/// A random basis monomial of `B(p;q)`.
pub fn b_monomial<R: Rng + ?Sized>(rng: &mut R, max_len: u32) -> BMonomial {
    *b_basis(max_len).choose(rng).unwrap()
}
