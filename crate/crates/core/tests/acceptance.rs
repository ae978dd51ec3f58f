//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gwa_core::calculus::{BarTarget, Calculus, OmegaElem};
use gwa_core::derivations::Comp;
use gwa_core::gwa::rewrite::{normalize_a, normalize_b};
use gwa_core::gwa::{sample, AMonomial, Gen, Strategy};
use gwa_core::integral::{beta_table, divergence, CoVector, Integral, IntegralValue};
use gwa_core::spin::{
    idempotent_from_legs, idempotents, strong_connection, BMatrix2, KoDimension, SpinGeometry,
    SpinParams,
};
use gwa_core::verify::{calculus_checks, derivation_checks, Check, VerifyConfig};
use gwa_core::{AlgElem, AlgebraCtx, Scalar, ZPoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ctx(p: &[i64]) -> Arc<AlgebraCtx> {
    AlgebraCtx::new(ZPoly::from_ints(p)).unwrap()
}

fn s(k: i64) -> Scalar {
    Scalar::from_int(k)
}

/// `1 + q² + … + q^{2l-2}`, summed term by term.
fn qint(l: i64) -> Scalar {
    (0..l).fold(Scalar::zero(), |acc, i| acc + Scalar::q_pow(2 * i as i32))
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:?}, limit {limit:?}"))
    }
}

fn all_pass(checks: &[Check], names: &[&str]) -> Result<(), String> {
    for name in names {
        let c = checks
            .iter()
            .find(|c| c.name == *name)
            .ok_or_else(|| format!("missing check {name}"))?;
        if !c.passed() {
            return Err(c.to_string());
        }
    }
    Ok(())
}

/// Non-z-power basis monomials must integrate to zero.
fn vanishes_elsewhere(l: &Integral) -> Result<(), String> {
    let c = l.ctx();
    for x in -3i32..=3 {
        for zp in 0..=3u32 {
            for zm in 0..=3u32 {
                if x == 0 && zp == zm {
                    continue;
                }
                let a = AlgElem::monomial(c, AMonomial::new(x, zp, zm), Scalar::one());
                if !l.integral(&a).is_zero() {
                    return Err(format!("integral({a}) = {}", l.integral(&a)));
                }
            }
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let l = Integral::new(&ctx(&[-1, 0, 1])).map_err(|e| e.to_string())?;
    let table = l.z_powers(20);
    for (k, v) in table.iter().enumerate() {
        let k = k as i64;
        let mut want = IntegralValue::zero(2);
        if k % 2 == 0 {
            want.coeffs[0] = s(1) / qint(k + 1);
        } else {
            want.coeffs[1] = qint(2) / qint(k + 1);
        }
        if *v != want {
            return Err(format!("integral(z^{k}) = {v}, expected {want}"));
        }
    }
    vanishes_elsewhere(&l)?;
    within(start, Duration::from_secs(5), "table")?;
    Ok(format!(
        "p = z^2-1, integral(z^k) exact for k <= 20 ({:?})",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let p = ZPoly::from_ints(&[1, -2, 1]);
    let t = beta_table(&p, 20).map_err(|e| e.to_string())?;
    for k in 0..=20usize {
        let (b0, b1) = (t.get(k, 0), t.get(k, 1));
        if *b0 != s(-(k as i64 + 1)) || *b1 != s(k as i64 + 2) {
            return Err(format!(
                "beta^{k} = ({b0}, {b1}), expected ({}, {})",
                -(k as i64 + 1),
                k + 2
            ));
        }
    }
    let l = Integral::new(&ctx(&[1, -2, 1])).map_err(|e| e.to_string())?;
    for (k, v) in l.z_powers(20).iter().enumerate() {
        let k = k as i64;
        let want = IntegralValue {
            coeffs: vec![-(s(k - 1) / qint(k + 1)), qint(2) * s(k) / qint(k + 1)],
        };
        if *v != want {
            return Err(format!("integral(z^{k}) = {v}, expected {want}"));
        }
    }
    vanishes_elsewhere(&l)?;
    within(start, Duration::from_secs(5), "tables")?;
    Ok(format!(
        "p = (z-1)^2, beta and integral(z^k) exact for k <= 20 ({:?})",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for p in [&[-1, 0, 1][..], &[1, -2, 1], &[-1, -1, 0, 1]] {
        let l = Integral::new(&ctx(p)).map_err(|e| e.to_string())?;
        let (a, b) = (l.z_powers(30), l.z_powers_by_recurrence(30));
        if let Some(k) = (0..=30).find(|&k| a[k] != b[k]) {
            return Err(format!(
                "p = {}: closed form {} vs recurrence {} at z^{k}",
                ZPoly::from_ints(p),
                a[k],
                b[k]
            ));
        }
    }
    within(start, Duration::from_secs(30), "comparison")?;
    Ok(format!(
        "closed form = recurrence on z^k, k <= 30, for z^2-1, (z-1)^2, z^3-z-1 ({:?})",
        start.elapsed()
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let cfg = VerifyConfig {
        bound: 4,
        ..VerifyConfig::default()
    };
    let checks = derivation_checks(&ctx(&[-1, 0, 1]), &cfg);
    all_pass(
        &checks,
        &[
            "derivations.skew_leibniz",
            "derivations.q_skew",
            "derivations.d0_theta",
            "derivations.delta_leibniz",
            "derivations.degree_shift",
            "derivations.sigma",
        ],
    )?;
    within(start, Duration::from_secs(60), "suite")?;
    Ok(format!(
        "skew Leibniz, twisted conjugation, d0 o theta = 0, delta Leibniz at length <= 4 ({:?})",
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let cfg = VerifyConfig {
        bound: 4,
        ..VerifyConfig::default()
    };
    for p in [&[1, -1][..], &[-1, 0, 1], &[1, -2, 1]] {
        let c = ctx(p);
        let checks = calculus_checks(&c, &cfg);
        all_pass(
            &checks,
            &[
                "calculus.d_leibniz",
                "calculus.omega_relations",
                "calculus.density_witnesses",
                "calculus.bar_witnesses",
            ],
        )
        .map_err(|e| format!("p = {}: {e}", c.p()))?;
        let calc = Calculus::with_defaults(&c);
        for k in Comp::ALL {
            let w = calc.density_witness(k).map_err(|e| e.to_string())?;
            if calc.eval_pairs(&w.pairs) != OmegaElem::basis(&c, k) {
                return Err(format!("p = {}: witness for w{k} evaluates wrongly", c.p()));
            }
        }
        for t in BarTarget::ALL {
            let w = calc.bar_witness(t).map_err(|e| e.to_string())?;
            if calc.eval_bar(&w.terms) != t.form(&c) {
                return Err(format!("p = {}: witness for {t} evaluates wrongly", c.p()));
            }
        }
    }
    Ok(format!(
        "Leibniz at length <= 4, omega relations, all witnesses for 1-z, z^2-1, (z-1)^2 ({:?})",
        start.elapsed()
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for p in [&[1, -1][..], &[-1, 0, 1], &[1, -2, 1]] {
        let c = ctx(p);
        let calc = Calculus::with_defaults(&c);
        let l = Integral::new(&c).map_err(|e| e.to_string())?;
        for k in Comp::ALL {
            let v = divergence(&calc, &CoVector::dual(&c, k));
            if !v.is_zero() {
                return Err(format!("p = {}: div(xi{k}) = {v}", c.p()));
            }
        }
        for _ in 0..200 {
            let mut el = || sample::a_elem(&c, &mut rng, 3, 3);
            let xi = CoVector::new(el(), el(), el());
            let a = el();
            let lhs = divergence(&calc, &xi.right_mul(&a));
            let rhs = &(&divergence(&calc, &xi) * &a) + &xi.eval(&calc.d(&a));
            if lhs != rhs {
                return Err(format!(
                    "p = {}: div(({xi}) ({a})) = {lhs}, expected {rhs}",
                    c.p()
                ));
            }
            for x in [&xi, &xi.right_mul(&a)] {
                let v = l.integral(&divergence(&calc, x));
                if !v.is_zero() {
                    return Err(format!("p = {}: integral(div({x})) = {v}", c.p()));
                }
            }
        }
    }
    Ok(format!(
        "200 random pairs per p, dual covectors divergence-free, integral o div = 0 ({:?})",
        start.elapsed()
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let corpus: [&[i64]; 6] = [
        &[1, -1],
        &[-1, 0, 1],
        &[1, -2, 1],
        &[-1, -1, 0, 1],
        &[2, 1],
        &[1],
    ];
    for p in corpus {
        let c = ctx(p);
        let name = c.p().to_string();
        for n in [1, -1] {
            let legs = strong_connection(&c, n).map_err(|e| e.to_string())?;
            let sum = legs
                .iter()
                .fold(AlgElem::zero(&c), |acc, (l, r)| acc + l * r);
            if sum != AlgElem::one(&c) {
                return Err(format!("p = {name}: legs of l({n}) sum to {sum}"));
            }
        }
        let (e1, em1) = idempotents(&c).map_err(|e| e.to_string())?;
        if e1.mul(&e1) != e1 || em1.mul(&em1) != em1 {
            return Err(format!("p = {name}: e(1) or e(-1) is not idempotent"));
        }
        if e1.add(&em1) != BMatrix2::identity(&c) {
            return Err(format!("p = {name}: e(1) + e(-1) = {}", e1.add(&em1)));
        }
        if idempotent_from_legs(&c, 1).map_err(|e| e.to_string())? != e1
            || idempotent_from_legs(&c, -1).map_err(|e| e.to_string())? != em1
        {
            return Err(format!(
                "p = {name}: idempotents from legs differ from the displayed matrices"
            ));
        }
    }
    Ok(format!(
        "legs sum to 1, e(n)^2 = e(n), e(1) + e(-1) = I on {} polynomials ({:?})",
        corpus.len(),
        start.elapsed()
    ))
}

const KO: [&str; 5] = [
    "ko.j_squared",
    "ko.j_gamma",
    "ko.j_d",
    "ko.order_zero",
    "ko.order_one",
];

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for p in [&[1, -1][..], &[1, -2, 1]] {
        let c = ctx(p);
        let geo = SpinGeometry::with_defaults(&c).map_err(|e| e.to_string())?;
        all_pass(&geo.verify_ko_dimension(3), &KO).map_err(|e| format!("p = {}: {e}", c.p()))?;
    }
    let c = ctx(&[1, -1]);
    let bad = SpinParams::unchecked(
        Scalar::one(),
        -Scalar::q_pow(-3),
        Scalar::q(),
        KoDimension::Two,
    );
    let geo = SpinGeometry::new(&c, Default::default(), bad).map_err(|e| e.to_string())?;
    let checks = geo.verify_ko_dimension(3);
    let jd = checks
        .iter()
        .find(|c| c.name == "ko.j_d")
        .ok_or("missing ko.j_d")?;
    let counterexample = match (&jd.status, &jd.counterexample) {
        (gwa_core::verify::Status::Fail, Some(ce)) => ce.clone(),
        _ => return Err("negative control nu = q did not fail J D = D J".into()),
    };
    println!("  negative control (nu = q) counterexample: {counterexample}");
    within(start, Duration::from_secs(120), "suite")?;
    Ok(format!(
        "five conditions at bound 3 on 1-z, (z-1)^2; nu = q fails J D = D J ({:?})",
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let c = ctx(&[-1, 0, 1]);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..1000u64 {
        let coeff = sample::scalar(&mut rng);
        let w = sample::word(&mut rng, &Gen::A, 8);
        let left = normalize_a(&c, coeff.clone(), &w, Strategy::Leftmost);
        for st in [Strategy::Rightmost, Strategy::Random(i)] {
            if normalize_a(&c, coeff.clone(), &w, st) != left {
                return Err(format!("word {w:?} reduces differently under {st:?}"));
            }
        }
        let w = sample::word(&mut rng, &Gen::B, 8);
        let left = normalize_b(&c, coeff.clone(), &w, Strategy::Leftmost);
        if normalize_b(&c, coeff, &w, Strategy::Rightmost) != left {
            return Err(format!("word {w:?} reduces differently under Rightmost"));
        }
    }
    for _ in 0..500 {
        let mut el = || sample::a_elem(&c, &mut rng, 3, 4);
        let (a, b, d) = (el(), el(), el());
        if &(&a * &b) * &d != &a * &(&b * &d) {
            return Err(format!("associativity fails on ({a}), ({b}), ({d})"));
        }
    }
    Ok(format!(
        "1000 words agree under 3 strategies, 500 associative triples ({:?})",
        start.elapsed()
    ))
}

fn criterion_10() -> Outcome {
    let c = ctx(&[-1, 0, 1]);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let a = sample::a_elem_dense(&c, &mut rng, 200, 10);
    let b = sample::a_elem_dense(&c, &mut rng, 200, 10);
    let start = Instant::now();
    let ab = &a * &b;
    let t = start.elapsed();
    within(start, Duration::from_secs(1), "product")?;
    Ok(format!(
        "200 x 200 term product with {} terms in {t:?}",
        ab.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        match f() {
            Ok(msg) => println!("PASS criterion {n}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
