mod common;

use common::*;
use gwa_core::gwa::AMonomial;
use gwa_core::spin::{SpinGeometry, Spinor};
use gwa_core::Scalar;
use proptest::prelude::*;

/// Spinor components forced into degrees -1 and +1.
fn spinor(
    ctx: &std::sync::Arc<gwa_core::AlgebraCtx>,
    a: &[(AMonomial, Scalar)],
    b: &[(AMonomial, Scalar)],
) -> Spinor {
    Spinor::new(of_degree(ctx, a, -1), of_degree(ctx, b, 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dirac_routes_agree(ctx in regular_ctx(), a in a_terms(3, 3), b in a_terms(3, 3)) {
        let geo = SpinGeometry::with_defaults(&ctx).unwrap();
        let s = spinor(&ctx, &a, &b);
        prop_assert_eq!(geo.dirac_via_connection(&s).unwrap(), geo.dirac(&s));
    }

    #[test]
    fn real_structure_signs(ctx in regular_ctx(), a in a_terms(3, 3), b in a_terms(3, 3)) {
        let geo = SpinGeometry::with_defaults(&ctx).unwrap();
        let s = spinor(&ctx, &a, &b);
        let j = |t: &Spinor| geo.real_structure(t).unwrap();
        prop_assert_eq!(j(&j(&s)), -&s);
        prop_assert_eq!(j(&SpinGeometry::grading(&s)), -&SpinGeometry::grading(&j(&s)));
        prop_assert_eq!(j(&geo.dirac(&s)), geo.dirac(&j(&s)));
        prop_assert_eq!(geo.dirac(&SpinGeometry::grading(&s)), -&SpinGeometry::grading(&geo.dirac(&s)));
    }

    #[test]
    fn commutator_with_d(ctx in regular_ctx(), a in a_terms(3, 2), b in a_terms(3, 2), u in b_terms(3, 2), v in b_terms(3, 2)) {
        let geo = SpinGeometry::with_defaults(&ctx).unwrap();
        let s = spinor(&ctx, &a, &b);
        let (u, v) = (b_elem(&ctx, &u), b_elem(&ctx, &v));
        prop_assert_eq!(geo.commutator_d(&u, &s), geo.commutator_d_closed_form(&u, &s));
        let j = |t: &Spinor| geo.real_structure(t).unwrap();
        let jvj = |t: &Spinor| j(&j(t).left_mul(&v));
        let lhs = &geo.commutator_d(&u, &jvj(&s)) - &jvj(&geo.commutator_d(&u, &s));
        prop_assert!(lhs.is_zero());
        prop_assert_eq!(jvj(&s).left_mul(&u), jvj(&s.left_mul(&u)));
    }

    #[test]
    fn spinors_are_a_bimodule(ctx in regular_ctx(), a in a_terms(3, 2), b in a_terms(3, 2), u in b_terms(3, 2), v in b_terms(3, 2)) {
        let s = spinor(&ctx, &a, &b);
        let (u, v) = (b_elem(&ctx, &u), b_elem(&ctx, &v));
        prop_assert_eq!(s.left_mul(&u).right_mul(&v), s.right_mul(&v).left_mul(&u));
        prop_assert_eq!(s.left_mul(&v).left_mul(&u), s.left_mul(&(&u * &v)));
    }
}
