#![allow(dead_code)]

use std::sync::Arc;

use gwa_core::gwa::{AMonomial, BMonomial, Monomial};
use gwa_core::scalars::QPoly;
use gwa_core::{AlgElem, AlgebraCtx, BElem, Scalar, ZPoly};
use proptest::prelude::*;

/// Regular polynomials used across the property tests.
pub const REGULAR: [&[i64]; 4] = [&[1, -1], &[-1, 0, 1], &[1, -2, 1], &[-1, -1, 0, 1]];

pub fn ctx(p: &[i64]) -> Arc<AlgebraCtx> {
    AlgebraCtx::new(ZPoly::from_ints(p)).unwrap()
}

pub fn regular_ctx() -> impl Strategy<Value = Arc<AlgebraCtx>> {
    (0..REGULAR.len()).prop_map(|i| ctx(REGULAR[i]))
}

/// Nonzero scalars: `a q^k`, `(a + b q^j) q^k`, and `(a + b q) / (1 ± q²)`.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    let nz = prop_oneof![-4i64..=-1, 1i64..=4];
    (nz, -3i32..=3, -3i64..=3, 1i32..=3, 0u8..3).prop_map(|(a, k, b, j, shape)| {
        let s = match shape {
            0 => Scalar::from_int(a),
            1 => Scalar::from_int(a) + Scalar::from_int(b).mul_q_pow(j),
            _ => {
                let den = QPoly::from_i64s(&[1, 0, if j % 2 == 0 { 1 } else { -1 }]);
                Scalar::from_polys(QPoly::from_i64s(&[a, b]), den).unwrap()
            }
        };
        if s.is_zero() {
            Scalar::one()
        } else {
            s.mul_q_pow(k)
        }
    })
}

/// Basis monomials `x^e z+^m z-^n` of word length at most `len`.
pub fn a_monomial(len: u32) -> impl Strategy<Value = AMonomial> {
    let l = len as i32;
    (-l..=l).prop_flat_map(move |x| {
        let rest = len - x.unsigned_abs();
        (0..=rest)
            .prop_flat_map(move |zp| (0..=rest - zp).prop_map(move |zm| AMonomial::new(x, zp, zm)))
    })
}

pub fn b_monomial(len: u32) -> impl Strategy<Value = BMonomial> {
    let l = len as i32;
    (-l..=l).prop_flat_map(move |xy| {
        (0..=len - xy.unsigned_abs()).prop_map(move |z| BMonomial::new(xy, z))
    })
}

pub fn a_terms(len: u32, max_terms: usize) -> impl Strategy<Value = Vec<(AMonomial, Scalar)>> {
    prop::collection::vec((a_monomial(len), scalar()), 0..=max_terms)
}

pub fn b_terms(len: u32, max_terms: usize) -> impl Strategy<Value = Vec<(BMonomial, Scalar)>> {
    prop::collection::vec((b_monomial(len), scalar()), 0..=max_terms)
}

pub fn a_elem(ctx: &Arc<AlgebraCtx>, terms: &[(AMonomial, Scalar)]) -> AlgElem {
    AlgElem::from_terms(ctx, terms.iter().cloned())
}

pub fn b_elem(ctx: &Arc<AlgebraCtx>, terms: &[(BMonomial, Scalar)]) -> BElem {
    BElem::from_terms(ctx, terms.iter().cloned())
}

/// Moves every monomial into degree `d` by adjusting its x-exponent.
pub fn of_degree(ctx: &Arc<AlgebraCtx>, terms: &[(AMonomial, Scalar)], d: i64) -> AlgElem {
    let fix = |m: &AMonomial| {
        AMonomial::new(
            (d - m.zplus as i64 + m.zminus as i64) as i32,
            m.zplus,
            m.zminus,
        )
    };
    AlgElem::from_terms(ctx, terms.iter().map(|(m, c)| (fix(m), c.clone())))
}

/// A homogeneous element in the degree of its first monomial.
pub fn homogeneous(ctx: &Arc<AlgebraCtx>, terms: &[(AMonomial, Scalar)]) -> AlgElem {
    let Some((first, _)) = terms.first() else {
        return AlgElem::zero(ctx);
    };
    of_degree(ctx, terms, first.degree())
}
