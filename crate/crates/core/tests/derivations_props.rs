mod common;

use common::*;
use gwa_core::derivations::{sigma, sigma_pow, Comp, DerivParams, Derivations};
use gwa_core::gwa::theta;
use gwa_core::Scalar;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = DerivParams> {
    (scalar(), scalar(), scalar()).prop_map(|(a0, ap, am)| DerivParams::new(a0, ap, am).unwrap())
}

fn comp() -> impl Strategy<Value = Comp> {
    prop::sample::select(Comp::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skew_leibniz(ctx in regular_ctx(), prm in params(), c in comp(), a in a_terms(5, 2), b in a_terms(5, 2)) {
        let der = Derivations::new(&ctx, prm);
        let (a, b) = (a_elem(&ctx, &a), a_elem(&ctx, &b));
        let rhs = &(&der.apply(c, &a) * &sigma(c, &b)) + &(&a * &der.apply(c, &b));
        prop_assert_eq!(der.apply(c, &(&a * &b)), rhs);
    }

    #[test]
    fn twisted_conjugation(ctx in regular_ctx(), prm in params(), c in comp(), a in a_terms(4, 3)) {
        let der = Derivations::new(&ctx, prm);
        let a = a_elem(&ctx, &a);
        let factor = Scalar::q_pow(-c.degree_shift() as i32);
        prop_assert_eq!(sigma_pow(c, &der.apply(c, &sigma(c, &a)), -1), der.apply(c, &a).scale(&factor));
    }

    #[test]
    fn sigma_is_an_automorphism(ctx in regular_ctx(), c in comp(), a in a_terms(4, 3), b in a_terms(4, 3), n in -3i32..=3) {
        let (a, b) = (a_elem(&ctx, &a), a_elem(&ctx, &b));
        prop_assert_eq!(sigma(c, &(&a * &b)), &sigma(c, &a) * &sigma(c, &b));
        prop_assert_eq!(sigma_pow(c, &sigma_pow(c, &a, n), -n), a);
    }

    #[test]
    fn degree_shifts(ctx in regular_ctx(), prm in params(), c in comp(), a in a_terms(5, 3)) {
        let der = Derivations::new(&ctx, prm);
        let a = homogeneous(&ctx, &a);
        prop_assert!(a.is_zero() || a.homogeneous_degree().is_some());
        if let Some(k) = a.homogeneous_degree() {
            let da = der.apply(c, &a);
            prop_assert!(da.is_zero() || da.is_homogeneous_of(k + c.degree_shift()));
        }
    }

    #[test]
    fn theta_image_is_killed_by_d0(ctx in regular_ctx(), prm in params(), u in b_terms(5, 3)) {
        let der = Derivations::new(&ctx, prm);
        prop_assert!(der.apply(Comp::Zero, &theta(&b_elem(&ctx, &u))).is_zero());
    }

    #[test]
    fn delta_leibniz(ctx in regular_ctx(), prm in params(), plus in any::<bool>(), u in b_terms(4, 2), v in b_terms(4, 2)) {
        let der = Derivations::new(&ctx, prm);
        let c = if plus { Comp::Plus } else { Comp::Minus };
        let (u, v) = (b_elem(&ctx, &u), b_elem(&ctx, &v));
        let rhs = &(&der.delta(c, &u) * &theta(&v)) + &(&theta(&u) * &der.delta(c, &v));
        prop_assert_eq!(der.delta(c, &(&u * &v)), rhs);
    }
}
