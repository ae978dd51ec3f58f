use std::sync::Arc;

use gwa_cli::parse::{
    parse_a, parse_b, parse_covector, parse_omega, parse_poly, parse_scalar, parse_spinor,
};
use gwa_core::calculus::OmegaElem;
use gwa_core::gwa::sample;
use gwa_core::integral::CoVector;
use gwa_core::spin::Spinor;
use gwa_core::{AlgElem, AlgebraCtx, ZPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<ZPoly> {
    vec![
        ZPoly::from_ints(&[1, -1]),
        ZPoly::from_ints(&[-1, 0, 1]),
        ZPoly::from_ints(&[1, -2, 1]),
        ZPoly::from_ints(&[-1, -1, 0, 1]),
        ZPoly::from_ints(&[0, 1]),
    ]
}

fn setup(which: usize, seed: u64) -> (Arc<AlgebraCtx>, ChaCha8Rng) {
    let p = corpus()[which % 5].clone();
    (AlgebraCtx::new(p).unwrap(), ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn documented_examples() {
    let ctx = AlgebraCtx::new(ZPoly::from_ints(&[-1, 0, 1])).unwrap();
    let q = gwa_core::Scalar::q();
    assert_eq!(
        parse_a(&ctx, "z+*x+").unwrap(),
        (AlgElem::x_plus(&ctx) * AlgElem::z_plus(&ctx)).scale(&q)
    );
    assert_eq!(parse_a(&ctx, "1").unwrap(), AlgElem::one(&ctx));
    let q2m1 = &q * &q - gwa_core::Scalar::one();
    assert_eq!(
        parse_a(&ctx, "x+^2*(q^2-1)").unwrap(),
        AlgElem::x_plus(&ctx).pow(2).scale(&q2m1)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_and_polys(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = sample::scalar(&mut rng) * sample::scalar(&mut rng) + sample::scalar(&mut rng);
        prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s.clone());
        let f = ZPoly::from_coeffs((0..4).map(|_| sample::scalar(&mut rng)).collect());
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn a_elements(which in 0usize..5, seed in any::<u64>(), terms in 0usize..6) {
        let (ctx, mut rng) = setup(which, seed);
        let a = sample::a_elem(&ctx, &mut rng, terms, 5);
        prop_assert_eq!(parse_a(&ctx, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn b_elements(which in 0usize..5, seed in any::<u64>(), terms in 0usize..6) {
        let (ctx, mut rng) = setup(which, seed);
        let b = sample::b_elem(&ctx, &mut rng, terms, 5);
        prop_assert_eq!(parse_b(&ctx, &b.to_string()).unwrap(), b);
    }

    #[test]
    fn modules(which in 0usize..5, seed in any::<u64>(), terms in 0usize..4) {
        let (ctx, mut rng) = setup(which, seed);
        let s = Spinor::new(
            sample::a_homogeneous(&ctx, &mut rng, -1, terms, 4),
            sample::a_homogeneous(&ctx, &mut rng, 1, terms, 4),
        ).unwrap();
        prop_assert_eq!(parse_spinor(&ctx, &s.to_string()).unwrap(), s);
        let mut elem = || sample::a_elem(&ctx, &mut rng, terms, 4);
        let w = OmegaElem::from_comps(elem(), elem(), elem());
        prop_assert_eq!(parse_omega(&ctx, &w.to_string()).unwrap(), w);
        let (a, b, c) = (elem(), elem(), elem());
        let xi = CoVector::new(a.clone(), b.clone(), c.clone());
        let text = format!("({a})*xi- + ({b})*xi0 + ({c})*xi+");
        prop_assert_eq!(parse_covector(&ctx, &text).unwrap(), xi);
    }
}
