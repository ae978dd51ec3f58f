mod common;

use common::*;
use gwa_core::gwa::rewrite::{multiply_out_a, multiply_out_b, normalize_a, normalize_b};
use gwa_core::gwa::{theta, theta_inverse, Gen, Monomial, Strategy as Rewrite};
use gwa_core::AlgElem;
use proptest::prelude::*;

fn word(alphabet: &'static [Gen]) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(prop::sample::select(alphabet), 1..=8)
}

proptest! {
    #[test]
    fn rewrite_orders_agree(ctx in regular_ctx(), w in word(&Gen::A), v in word(&Gen::B), seed in any::<u64>(), c in scalar()) {
        let left = normalize_a(&ctx, c.clone(), &w, Rewrite::Leftmost);
        prop_assert_eq!(&normalize_a(&ctx, c.clone(), &w, Rewrite::Rightmost), &left);
        prop_assert_eq!(&normalize_a(&ctx, c.clone(), &w, Rewrite::Random(seed)), &left);
        prop_assert_eq!(&multiply_out_a(&ctx, &w).scale(&c), &left);
        let left = normalize_b(&ctx, c.clone(), &v, Rewrite::Leftmost);
        prop_assert_eq!(&normalize_b(&ctx, c.clone(), &v, Rewrite::Random(seed)), &left);
        prop_assert_eq!(&multiply_out_b(&ctx, &v).scale(&c), &left);
    }

    #[test]
    fn associative_and_distributive(ctx in regular_ctx(), a in a_terms(3, 3), b in a_terms(3, 3), c in a_terms(3, 3)) {
        let (a, b, c) = (a_elem(&ctx, &a), a_elem(&ctx, &b), a_elem(&ctx, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn b_associative(ctx in regular_ctx(), u in b_terms(3, 3), v in b_terms(3, 3), w in b_terms(3, 3)) {
        let (u, v, w) = (b_elem(&ctx, &u), b_elem(&ctx, &v), b_elem(&ctx, &w));
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn grading_is_multiplicative(ctx in regular_ctx(), a in a_terms(3, 3), b in a_terms(3, 3)) {
        let (a, b) = (homogeneous(&ctx, &a), homogeneous(&ctx, &b));
        let ab = &a * &b;
        prop_assert!(a.is_zero() || a.homogeneous_degree().is_some());
        if let (Some(da), Some(db)) = (a.homogeneous_degree(), b.homogeneous_degree()) {
            prop_assert!(ab.is_zero() || ab.is_homogeneous_of(da + db));
        }
    }

    #[test]
    fn star_is_an_involutive_antihomomorphism(ctx in regular_ctx(), a in a_terms(3, 3), b in a_terms(3, 3)) {
        let (a, b) = (a_elem(&ctx, &a), a_elem(&ctx, &b));
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn theta_is_a_homomorphism_onto_degree_zero(ctx in regular_ctx(), u in b_terms(3, 3), v in b_terms(3, 3)) {
        let (u, v) = (b_elem(&ctx, &u), b_elem(&ctx, &v));
        prop_assert_eq!(theta(&(&u * &v)), &theta(&u) * &theta(&v));
        prop_assert_eq!(theta_inverse(&theta(&u)).unwrap(), u.clone());
        prop_assert_eq!(theta(&u.star()), theta(&u).star());
    }

    #[test]
    fn degree_zero_monomials_are_in_the_image(ctx in regular_ctx(), m in a_monomial(6)) {
        let a = AlgElem::monomial(&ctx, m, gwa_core::Scalar::one());
        if m.degree() == 0 {
            prop_assert_eq!(theta(&theta_inverse(&a).unwrap()), a);
        } else {
            prop_assert!(theta_inverse(&a).is_err());
        }
    }
}
