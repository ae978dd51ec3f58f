mod common;

use common::scalar;
use gwa_core::scalars::{q2_separability, q_integer};
use gwa_core::{Scalar, ZPoly};
use proptest::prelude::*;

fn zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(prop_oneof![Just(Scalar::zero()), scalar()], 1..=4)
        .prop_map(ZPoly::from_coeffs)
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a * &a.recip().unwrap()).is_one());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn conj_is_a_field_involution(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(Scalar::q().conj(), Scalar::q());
    }

    #[test]
    fn q_derivative_is_linear(f in zpoly(), g in zpoly(), s in scalar()) {
        let b = Scalar::q_pow(2);
        let lhs = (&f.scale(&s) + &g).q_derivative(&b).unwrap();
        let rhs = &f.q_derivative(&b).unwrap().scale(&s) + &g.q_derivative(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn separability_certificates_remultiply(p in zpoly()) {
        prop_assume!(!p.is_zero());
        if let Some(cert) = q2_separability(&p).unwrap() {
            let zpd = p.q_derivative(&Scalar::q_pow(2)).unwrap().shift(1);
            prop_assert_eq!(&(&cert.f * &p) + &(&cert.g * &zpd), ZPoly::one());
            prop_assert_eq!(&(&cert.f0 * &ZPoly::z()) + &(&cert.g0 * &p), ZPoly::one());
            prop_assert!(!p.constant_term().is_zero());
        }
    }
}

#[test]
fn q_derivative_of_powers() {
    let b = Scalar::q_pow(2);
    for k in 1..=10usize {
        let zk = ZPoly::monomial(Scalar::one(), k);
        assert_eq!(
            zk.q_derivative(&b).unwrap(),
            ZPoly::monomial(q_integer(k as u32), k - 1)
        );
    }
    assert!(ZPoly::one().q_derivative(&Scalar::one()).is_err());
}
