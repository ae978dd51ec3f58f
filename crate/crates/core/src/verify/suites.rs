//! Identity checks grouped by layer. Quantified identities run over every
//! basis monomial up to a word-length bound; the rest use seeded samples.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::{expect_eq, Check, Report};
use crate::calculus::{solve_density, BarTarget, Calculus, OmegaElem};
use crate::derivations::{
    d0_closed_form_minus, d0_closed_form_plus, sigma, sigma_pow, Comp, DerivParams, Derivations,
};
use crate::error::Result;
use crate::gwa::rewrite::{multiply_out_a, multiply_out_b, normalize_a, normalize_b};
use crate::gwa::{
    a_basis, b_basis, sample, theta, theta_inverse, AMonomial, AlgElem, AlgebraCtx, BElem,
    BMonomial, Gen, Monomial, Strategy,
};
use crate::integral::{beta_table, divergence, CoVector, Integral, IntegralValue};
use crate::scalars::{q_integer, Scalar, ZPoly};
use crate::spin::{
    idempotent_from_legs, idempotents, spanning_spinors, strong_connection, BMatrix2, SpinGeometry,
    SpinParams,
};

const NOT_REGULAR: &str = "p not q²-separable";
const CONSTANT_P: &str = "constant p has trivial integral space";

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Word-length bound for spanning-set checks.
    pub bound: u32,
    pub deriv: DerivParams,
    pub spin: SpinParams,
    /// Number of random samples for sampled checks.
    pub samples: usize,
    /// Largest power of `z` in integral tables.
    pub kmax: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            bound: 3,
            deriv: DerivParams::default(),
            spin: SpinParams::default(),
            samples: 100,
            kmax: 30,
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

fn a_mono(ctx: &Arc<AlgebraCtx>, m: AMonomial) -> AlgElem {
    AlgElem::monomial(ctx, m, Scalar::one())
}

fn b_mono(ctx: &Arc<AlgebraCtx>, m: BMonomial) -> BElem {
    BElem::monomial(ctx, m, Scalar::one())
}

fn a_elems(ctx: &Arc<AlgebraCtx>, bound: u32) -> Vec<AlgElem> {
    a_basis(bound).into_iter().map(|m| a_mono(ctx, m)).collect()
}

fn b_elems(ctx: &Arc<AlgebraCtx>, bound: u32) -> Vec<BElem> {
    b_basis(bound).into_iter().map(|m| b_mono(ctx, m)).collect()
}

fn gen_a(ctx: &Arc<AlgebraCtx>, g: Gen) -> AlgElem {
    g.to_a(ctx).expect("generator of A")
}

fn gen_b(ctx: &Arc<AlgebraCtx>, g: Gen) -> BElem {
    g.to_b(ctx).expect("generator of B")
}

fn word_str(w: &[Gen]) -> String {
    w.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join("*")
}

/// Normal form, grading, involution and the embedding `Θ`.
pub fn gwa_checks(ctx: &Arc<AlgebraCtx>, cfg: &VerifyConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    let basis = a_elems(ctx, cfg.bound);
    let bbasis = b_elems(ctx, cfg.bound);

    checks.push(Check::run(
        "gwa.relations",
        "x+ z = q^-1 z x+, x- z = q z x-, x+ x- = p(z), x- x+ = p(q^2 z); xz = q^2 zx, yz = q^-2 zy, xy = q^2 z p(q^2 z), yx = z p(z)",
        || {
            use Gen::*;
            let g = |x| gen_a(ctx, x);
            let q = Scalar::q();
            let qi = Scalar::q_pow(-1);
            for zg in [ZPlus, ZMinus] {
                expect_eq(format!("x+*{zg}"), &(g(XPlus) * g(zg)), &(g(zg) * g(XPlus)).scale(&qi))?;
                expect_eq(format!("x-*{zg}"), &(g(XMinus) * g(zg)), &(g(zg) * g(XMinus)).scale(&q))?;
            }
            expect_eq("z-*z+", &(g(ZMinus) * g(ZPlus)), &(g(ZPlus) * g(ZMinus)))?;
            let p = ctx.p();
            let pq2 = p.rescale_q_pow(2);
            expect_eq("x+*x-", &(g(XPlus) * g(XMinus)), &AlgElem::from_zpoly(ctx, p))?;
            expect_eq("x-*x+", &(g(XMinus) * g(XPlus)), &AlgElem::from_zpoly(ctx, &pq2))?;

            let zp = ZPoly::z();
            let xy = (&zp * &pq2).scale(&Scalar::q_pow(2));
            let yx = &zp * p;
            let b = |x| gen_b(ctx, x);
            let q2 = Scalar::q_pow(2);
            let qm2 = Scalar::q_pow(-2);
            let rels: [(&str, BElem, BElem); 4] = [
                ("x*z", b(X) * b(Z), (b(Z) * b(X)).scale(&q2)),
                ("y*z", b(Y) * b(Z), (b(Z) * b(Y)).scale(&qm2)),
                ("x*y", b(X) * b(Y), BElem::from_zpoly(ctx, &xy)),
                ("y*x", b(Y) * b(X), BElem::from_zpoly(ctx, &yx)),
            ];
            for (name, lhs, rhs) in rels {
                expect_eq(name, &lhs, &rhs)?;
                expect_eq(format!("theta({name})"), &theta(&lhs), &theta(&rhs))?;
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "gwa.confluence",
        "all rewrite orders reach the same normal form",
        || {
            let mut rng = cfg.rng(1);
            for i in 0..cfg.samples {
                let w = sample::word(&mut rng, &Gen::A, 8);
                let c = sample::scalar(&mut rng);
                let left = normalize_a(ctx, c.clone(), &w, Strategy::Leftmost);
                let right = normalize_a(ctx, c.clone(), &w, Strategy::Rightmost);
                let random = normalize_a(ctx, c.clone(), &w, Strategy::Random(cfg.seed + i as u64));
                let product = multiply_out_a(ctx, &w).scale(&c);
                let what = word_str(&w);
                expect_eq(format!("rightmost({what})"), &right, &left)?;
                expect_eq(format!("random({what})"), &random, &left)?;
                expect_eq(format!("product({what})"), &product, &left)?;

                let w = sample::word(&mut rng, &Gen::B, 8);
                let left = normalize_b(ctx, c.clone(), &w, Strategy::Leftmost);
                let right = normalize_b(ctx, c.clone(), &w, Strategy::Rightmost);
                let product = multiply_out_b(ctx, &w).scale(&c);
                let what = word_str(&w);
                expect_eq(format!("rightmost({what})"), &right, &left)?;
                expect_eq(format!("product({what})"), &product, &left)?;
            }
            Ok(())
        },
    ));

    checks.push(Check::run("gwa.associativity", "(ab)c = a(bc)", || {
        let mut rng = cfg.rng(2);
        for _ in 0..cfg.samples {
            let a = sample::a_elem(ctx, &mut rng, 3, cfg.bound);
            let b = sample::a_elem(ctx, &mut rng, 3, cfg.bound);
            let c = sample::a_elem(ctx, &mut rng, 3, cfg.bound);
            expect_eq(
                format!("(({a})({b}))({c})"),
                &(&(&a * &b) * &c),
                &(&a * &(&b * &c)),
            )?;
            let u = sample::b_elem(ctx, &mut rng, 3, cfg.bound);
            let v = sample::b_elem(ctx, &mut rng, 3, cfg.bound);
            let w = sample::b_elem(ctx, &mut rng, 3, cfg.bound);
            expect_eq(
                format!("(({u})({v}))({w})"),
                &(&(&u * &v) * &w),
                &(&u * &(&v * &w)),
            )?;
        }
        Ok(())
    }));

    checks.push(Check::run(
        "gwa.distributivity",
        "a(b + c) = ab + ac, (a + b)c = ac + bc",
        || {
            let mut rng = cfg.rng(3);
            for _ in 0..cfg.samples {
                let a = sample::a_elem(ctx, &mut rng, 3, cfg.bound);
                let b = sample::a_elem(ctx, &mut rng, 3, cfg.bound);
                let c = sample::a_elem(ctx, &mut rng, 3, cfg.bound);
                expect_eq(
                    format!("({a})(({b}) + ({c}))"),
                    &(&a * &(&b + &c)),
                    &(&(&a * &b) + &(&a * &c)),
                )?;
                expect_eq(
                    format!("(({a}) + ({b}))({c})"),
                    &(&(&a + &b) * &c),
                    &(&(&a * &c) + &(&b * &c)),
                )?;
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "gwa.grading",
        "|ab| = |a| + |b| for homogeneous a, b",
        || {
            for a in &basis {
                for b in &basis {
                    let ab = a * b;
                    let want = a.homogeneous_degree().unwrap() + b.homogeneous_degree().unwrap();
                    if !ab.is_zero() && !ab.is_homogeneous_of(want) {
                        return Err(format!("({a})({b}) = {ab} is not of degree {want}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run("gwa.star", "(ab)^* = b^* a^*, a^** = a", || {
        for a in &basis {
            expect_eq(format!("(({a})^*)^*"), &a.star().star(), a)?;
            for b in &basis {
                expect_eq(
                    format!("(({a})({b}))^*"),
                    &(a * b).star(),
                    &(&b.star() * &a.star()),
                )?;
            }
        }
        for u in &bbasis {
            expect_eq(format!("(({u})^*)^*"), &u.star().star(), u)?;
            for v in &bbasis {
                expect_eq(
                    format!("(({u})({v}))^*"),
                    &(u * v).star(),
                    &(&v.star() * &u.star()),
                )?;
            }
        }
        Ok(())
    }));

    checks.push(Check::run(
        "gwa.theta",
        "theta(uv) = theta(u) theta(v), theta onto degree 0",
        || {
            for u in &bbasis {
                let tu = theta(u);
                if !tu.is_homogeneous_of(0) {
                    return Err(format!("theta({u}) = {tu} has nonzero degree"));
                }
                let back = theta_inverse(&tu).map_err(|e| format!("theta^-1(theta({u})): {e}"))?;
                expect_eq(format!("theta^-1(theta({u}))"), &back, u)?;
                for v in &bbasis {
                    expect_eq(
                        format!("theta(({u})({v}))"),
                        &theta(&(u * v)),
                        &(&tu * &theta(v)),
                    )?;
                }
            }
            for m in a_basis(2 * cfg.bound)
                .into_iter()
                .filter(|m| m.degree() == 0)
            {
                let a = a_mono(ctx, m);
                let u = theta_inverse(&a)
                    .map_err(|e| format!("{a} is not in the image of theta: {e}"))?;
                expect_eq(format!("theta(theta^-1({a}))"), &theta(&u), &a)?;
            }
            Ok(())
        },
    ));

    checks
}

/// The three skew derivations and their twisting automorphisms.
pub fn derivation_checks(ctx: &Arc<AlgebraCtx>, cfg: &VerifyConfig) -> Vec<Check> {
    let der = Derivations::new(ctx, cfg.deriv.clone());
    let basis = a_elems(ctx, cfg.bound);
    let bbasis = b_elems(ctx, cfg.bound);
    let mut checks = Vec::new();

    checks.push(Check::run(
        "derivations.skew_leibniz",
        "d(ab) = d(a) sigma(b) + a d(b)",
        || {
            for c in Comp::ALL {
                let images: Vec<AlgElem> = basis.iter().map(|a| der.apply(c, a)).collect();
                for (a, da) in basis.iter().zip(&images) {
                    for (b, db) in basis.iter().zip(&images) {
                        let lhs = der.apply(c, &(a * b));
                        let rhs = &(da * &sigma(c, b)) + &(a * db);
                        expect_eq(format!("d{c}(({a})({b}))"), &lhs, &rhs)?;
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "derivations.q_skew",
        "sigma^-1 d sigma = q^(+2) d+, q^(-2) d-, d0",
        || {
            for c in Comp::ALL {
                let factor = Scalar::q_pow(-c.degree_shift() as i32);
                for a in &basis {
                    let lhs = sigma_pow(c, &der.apply(c, &sigma(c, a)), -1);
                    expect_eq(
                        format!("sigma{c}^-1(d{c}(sigma{c}({a})))"),
                        &lhs,
                        &der.apply(c, a).scale(&factor),
                    )?;
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "derivations.degree_shift",
        "d+ lowers degree by 2, d- raises by 2, d0 keeps it",
        || {
            for c in Comp::ALL {
                for a in &basis {
                    let want = a.homogeneous_degree().unwrap() + c.degree_shift();
                    let da = der.apply(c, a);
                    if !da.is_zero() && !da.is_homogeneous_of(want) {
                        return Err(format!("d{c}({a}) = {da} is not of degree {want}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "derivations.sigma",
        "sigma(ab) = sigma(a) sigma(b), sigma^-1 sigma = id",
        || {
            for c in Comp::ALL {
                for a in &basis {
                    expect_eq(
                        format!("sigma{c}^-1(sigma{c}({a}))"),
                        &sigma_pow(c, &sigma(c, a), -1),
                        a,
                    )?;
                    for b in &basis {
                        expect_eq(
                            format!("sigma{c}(({a})({b}))"),
                            &sigma(c, &(a * b)),
                            &(&sigma(c, a) * &sigma(c, b)),
                        )?;
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "derivations.d0_closed_form",
        "d0(x+^n z+^m) = alpha0 [m+n] x+^n z+^m, d0(x-^n z-^m) = -alpha0 q^(-2(m+n)) [m+n] x-^n z-^m",
        || {
            for n in 0..=8u32 {
                for m in 0..=8 - n {
                    let a = a_mono(ctx, AMonomial::new(n as i32, m, 0));
                    expect_eq(format!("d0({a})"), &der.apply(Comp::Zero, &a), &d0_closed_form_plus(ctx, der.params(), n, m))?;
                    let a = a_mono(ctx, AMonomial::new(-(n as i32), 0, m));
                    expect_eq(format!("d0({a})"), &der.apply(Comp::Zero, &a), &d0_closed_form_minus(ctx, der.params(), n, m))?;
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "derivations.d0_theta",
        "d0(theta(u)) = 0",
        || {
            for u in &bbasis {
                let v = der.apply(Comp::Zero, &theta(u));
                if !v.is_zero() {
                    return Err(format!("d0(theta({u})) = {v}"));
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "derivations.delta_leibniz",
        "delta(uv) = delta(u) theta(v) + theta(u) delta(v)",
        || {
            for c in [Comp::Plus, Comp::Minus] {
                for u in &bbasis {
                    for v in &bbasis {
                        let lhs = der.delta(c, &(u * v));
                        let rhs = &(&der.delta(c, u) * &theta(v)) + &(&theta(u) * &der.delta(c, v));
                        expect_eq(format!("delta{c}(({u})({v}))"), &lhs, &rhs)?;
                    }
                }
            }
            Ok(())
        },
    ));

    checks
}

/// The first-order calculus: Leibniz rule, bimodule structure, density.
pub fn calculus_checks(ctx: &Arc<AlgebraCtx>, cfg: &VerifyConfig) -> Vec<Check> {
    let calc = Calculus::new(ctx, cfg.deriv.clone());
    let basis = a_elems(ctx, cfg.bound);
    let bbasis = b_elems(ctx, cfg.bound);
    let regular = ctx.is_regular();
    let mut checks = Vec::new();

    checks.push(Check::run(
        "calculus.d_leibniz",
        "d(ab) = d(a) b + a d(b)",
        || {
            let ds: Vec<OmegaElem> = basis.iter().map(|a| calc.d(a)).collect();
            for (a, da) in basis.iter().zip(&ds) {
                for (b, db) in basis.iter().zip(&ds) {
                    let rhs = &da.right_act(b) + &db.left_mul(a);
                    expect_eq(format!("d(({a})({b}))"), &calc.d(&(a * b)), &rhs)?;
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "calculus.bimodule",
        "(a w) b = a (w b), (w a) b = w (ab)",
        || {
            let mut rng = cfg.rng(4);
            for _ in 0..cfg.samples {
                let mut el = || sample::a_elem(ctx, &mut rng, 2, cfg.bound);
                let (a, b) = (el(), el());
                let w = OmegaElem::from_comps(el(), el(), el());
                expect_eq(
                    format!("(({a}) ({w})) ({b})"),
                    &w.left_mul(&a).right_act(&b),
                    &w.right_act(&b).left_mul(&a),
                )?;
                expect_eq(
                    format!("(({w}) ({a})) ({b})"),
                    &w.right_act(&a).right_act(&b),
                    &w.right_act(&(&a * &b)),
                )?;
                expect_eq(
                    format!("({a}) (({b}) ({w}))"),
                    &w.left_mul(&b).left_mul(&a),
                    &w.left_mul(&(&a * &b)),
                )?;
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "calculus.omega_relations",
        "w- g = q^|g| g w-, w0 g = q^(2|g|) g w0, w+ g = q^|g| g w+",
        || {
            for c in Comp::ALL {
                let w = OmegaElem::basis(ctx, c);
                for g in Gen::A {
                    let ge = gen_a(ctx, g);
                    let want = w
                        .left_mul(&ge)
                        .scale(&Scalar::q_pow(c.twist() * g.degree() as i32));
                    expect_eq(format!("w{c}*{g}"), &w.right_act(&ge), &want)?;
                }
            }
            Ok(())
        },
    ));

    checks.push(Check::run(
        "calculus.degree_bookkeeping",
        "d maps A_k to A_(k+2) w- + A_k w0 + A_(k-2) w+",
        || {
            for a in &basis {
                let k = a.homogeneous_degree().unwrap();
                let da = calc.d(a);
                for c in Comp::ALL {
                    let comp = da.comp(c);
                    if !comp.is_zero() && !comp.is_homogeneous_of(k + c.degree_shift()) {
                        return Err(format!(
                            "d({a}) = {da} has a {c} component of the wrong degree"
                        ));
                    }
                }
            }
            Ok(())
        },
    ));

    if calc.params().is_star_compatible() {
        checks.push(Check::run(
            "calculus.star",
            "d(a^*) = d(a)^*, star on forms is involutive",
            || {
                for a in &basis {
                    let da = calc.d(a);
                    let star = calc.star_omega(&da).map_err(|e| e.to_string())?;
                    expect_eq(format!("d(({a})^*)"), &calc.d(&a.star()), &star)?;
                    let back = calc.star_omega(&star).map_err(|e| e.to_string())?;
                    expect_eq(format!("(d({a})^*)^*"), &back, &da)?;
                }
                Ok(())
            },
        ));
    } else {
        checks.push(Check::skipped(
            "calculus.star",
            "d(a^*) = d(a)^*",
            "derivation parameters are not star-compatible",
        ));
    }

    checks.push(Check::run(
        "calculus.horizontal",
        "pi(pi(w)) = pi(w), pi(d(theta(u))) = d(theta(u))",
        || {
            let mut rng = cfg.rng(5);
            for _ in 0..cfg.samples {
                let mut el = || sample::a_elem(ctx, &mut rng, 2, cfg.bound);
                let w = OmegaElem::from_comps(el(), el(), el());
                expect_eq(
                    format!("pi(pi({w}))"),
                    &w.horizontal().horizontal(),
                    &w.horizontal(),
                )?;
            }
            for u in &bbasis {
                let w = calc.d(&theta(u));
                expect_eq(format!("pi(d(theta({u})))"), &w.horizontal(), &w)?;
                w.restrict_to_b()
                    .map_err(|e| format!("d(theta({u})) = {w}: {e}"))?;
            }
            Ok(())
        },
    ));

    let density_ref = "w-, w0, w+ as sums a d(b)";
    let bar_ref = "z+^2 w-, x+^2 w-, z+ x+ w-, z-^2 w+, x-^2 w+, z- x- w+ as sums u d(v) over B";
    let solve_ref = "linear solve finds w-, w0, w+ in span of m d(g)";
    if !regular {
        checks.push(Check::skipped(
            "calculus.density_witnesses",
            density_ref,
            NOT_REGULAR,
        ));
        checks.push(Check::skipped(
            "calculus.bar_witnesses",
            bar_ref,
            NOT_REGULAR,
        ));
        checks.push(Check::skipped(
            "calculus.density_linear_solve",
            solve_ref,
            NOT_REGULAR,
        ));
        return checks;
    }

    checks.push(Check::run(
        "calculus.density_witnesses",
        density_ref,
        || {
            for c in Comp::ALL {
                let w = calc.density_witness(c).map_err(|e| e.to_string())?;
                expect_eq(
                    format!("witness for w{c}"),
                    &calc.eval_pairs(&w.pairs),
                    &OmegaElem::basis(ctx, c),
                )?;
            }
            Ok(())
        },
    ));

    checks.push(Check::run("calculus.bar_witnesses", bar_ref, || {
        for t in BarTarget::ALL {
            let w = calc.bar_witness(t).map_err(|e| e.to_string())?;
            expect_eq(
                format!("witness for {t}"),
                &calc.eval_bar(&w.terms),
                &t.form(ctx),
            )?;
        }
        Ok(())
    }));

    checks.push(Check::run(
        "calculus.density_linear_solve",
        solve_ref,
        || {
            let limit = 2 * ctx.p().degree().unwrap_or(0) as u32 + 2;
            for c in Comp::ALL {
                let found = (1..=limit).find_map(|b| solve_density(&calc, c, b));
                let pairs = found.ok_or_else(|| {
                    format!("no expression of w{c} with factors of word length <= {limit}")
                })?;
                expect_eq(
                    format!("solved expression of w{c}"),
                    &calc.eval_pairs(&pairs),
                    &OmegaElem::basis(ctx, c),
                )?;
            }
            Ok(())
        },
    ));

    checks
}

fn example_z2_minus_1(k: usize) -> IntegralValue {
    let den = q_integer(k as u32 + 1);
    let mut v = IntegralValue::zero(2);
    if k.is_multiple_of(2) {
        v.coeffs[0] = den.recip().unwrap();
    } else {
        v.coeffs[1] = q_integer(2).checked_div(&den).unwrap();
    }
    v
}

fn example_z_minus_1_squared(k: usize) -> IntegralValue {
    let den = q_integer(k as u32 + 1);
    let k = k as i64;
    IntegralValue {
        coeffs: vec![
            Scalar::from_int(1 - k).checked_div(&den).unwrap(),
            (q_integer(2) * Scalar::from_int(k))
                .checked_div(&den)
                .unwrap(),
        ],
    }
}

/// Compares `Λ(z^k)` and, where stated, `β` against the known closed forms
/// for `p = z² - 1` and `p = (z - 1)²`. `None` for other `p`.
pub fn example_table_check(p: &ZPoly, kmax: usize) -> Option<Check> {
    let ctx = AlgebraCtx::new(p.clone()).ok()?;
    if *p == ZPoly::from_ints(&[-1, 0, 1]) {
        Some(Check::run(
            "integral.example_table",
            "p = z^2 - 1: even k -> v0/[k+1], odd k -> [2]/[k+1] v1",
            || {
                let l = Integral::new(&ctx).map_err(|e| e.to_string())?;
                for (k, v) in l.z_powers(kmax).iter().enumerate() {
                    expect_eq(format!("integral(z^{k})"), v, &example_z2_minus_1(k))?;
                }
                Ok(())
            },
        ))
    } else if *p == ZPoly::from_ints(&[1, -2, 1]) {
        Some(Check::run(
            "integral.example_table",
            "p = (z - 1)^2: beta0^k = -(k+1), beta1^k = k+2, integral(z^k) = ((1-k) v0 + [2] k v1)/[k+1]",
            || {
                let t = beta_table(p, kmax).map_err(|e| e.to_string())?;
                for k in 0..=kmax {
                    expect_eq(format!("beta0^{k}"), t.get(k, 0), &Scalar::from_int(-(k as i64 + 1)))?;
                    expect_eq(format!("beta1^{k}"), t.get(k, 1), &Scalar::from_int(k as i64 + 2))?;
                }
                let l = Integral::new(&ctx).map_err(|e| e.to_string())?;
                for (k, v) in l.z_powers(kmax).iter().enumerate() {
                    expect_eq(format!("integral(z^{k})"), v, &example_z_minus_1_squared(k))?;
                }
                Ok(())
            },
        ))
    } else {
        None
    }
}

/// Divergence, the integral `Λ` and its recurrence oracle.
pub fn integral_checks(ctx: &Arc<AlgebraCtx>, cfg: &VerifyConfig) -> Vec<Check> {
    const NAMES: [(&str, &str); 9] = [
        (
            "integral.dual_divergence",
            "div(xi_i) = 0 for the dual covectors",
        ),
        (
            "integral.divergence_contract",
            "div(xi a) = div(xi) a + xi(d(a))",
        ),
        ("integral.lambda_div", "integral(div(xi)) = 0"),
        (
            "integral.recurrence",
            "closed form of integral(z^k) agrees with the recurrence",
        ),
        (
            "integral.lambda_functional",
            "integral(q^2 p(q^2 z) f(q^2 z)) = integral(p(z) f(z))",
        ),
        (
            "integral.vanishing_theta",
            "integral(theta(x^(k+1) z^l)) = integral(theta(y^(k+1) z^l)) = 0",
        ),
        (
            "integral.beta_rational",
            "beta entries are rational numbers",
        ),
        (
            "integral.quotient_dimension",
            "dim k[z] / (k[z] cap im div) = deg p",
        ),
        (
            "integral.example_table",
            "integral(z^k) closed forms for p = z^2 - 1 and p = (z - 1)^2",
        ),
    ];
    let reason = if !ctx.is_regular() {
        Some(NOT_REGULAR)
    } else if ctx.p().degree() == Some(0) {
        Some(CONSTANT_P)
    } else {
        None
    };
    if let Some(reason) = reason {
        return NAMES[..8]
            .iter()
            .map(|(n, r)| Check::skipped(n, r, reason))
            .collect();
    }
    let name = |i: usize| NAMES[i].0;
    let refs = |i: usize| NAMES[i].1;
    let calc = Calculus::new(ctx, cfg.deriv.clone());
    let l = Integral::new(ctx).expect("regular nonconstant p");
    let mut checks = Vec::new();

    checks.push(Check::run(name(0), refs(0), || {
        for c in Comp::ALL {
            let v = divergence(&calc, &CoVector::dual(ctx, c));
            if !v.is_zero() {
                return Err(format!("div(xi{c}) = {v}"));
            }
        }
        Ok(())
    }));

    let mut rng = cfg.rng(6);
    let corpus: Vec<(CoVector, AlgElem)> = (0..cfg.samples)
        .map(|_| {
            let mut el = || sample::a_elem(ctx, &mut rng, 2, cfg.bound);
            (CoVector::new(el(), el(), el()), el())
        })
        .collect();
    checks.push(Check::run(name(1), refs(1), || {
        for (xi, a) in &corpus {
            let lhs = divergence(&calc, &xi.right_mul(a));
            let rhs = &(&divergence(&calc, xi) * a) + &xi.eval(&calc.d(a));
            expect_eq(format!("div(({xi}) ({a}))"), &lhs, &rhs)?;
        }
        Ok(())
    }));
    checks.push(Check::run(name(2), refs(2), || {
        for (xi, a) in &corpus {
            for xi in [xi.clone(), xi.right_mul(a)] {
                let v = l.integral(&divergence(&calc, &xi));
                if !v.is_zero() {
                    return Err(format!("integral(div({xi})) = {v}"));
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(name(3), refs(3), || {
        let closed = l.z_powers(cfg.kmax);
        let rec = l.z_powers_by_recurrence(cfg.kmax);
        for (k, (a, b)) in closed.iter().zip(&rec).enumerate() {
            expect_eq(format!("integral(z^{k})"), a, b)?;
        }
        Ok(())
    }));

    checks.push(Check::run(name(4), refs(4), || {
        for j in 0..=cfg.bound as usize + 2 {
            let f = ZPoly::monomial(Scalar::one(), j);
            if !l.check_lambda_functional(&f) {
                return Err(format!("fails for f = z^{j}"));
            }
        }
        Ok(())
    }));

    checks.push(Check::run(name(5), refs(5), || {
        for k in 0..=cfg.bound as i32 {
            for zl in 0..=cfg.bound {
                for xy in [k + 1, -(k + 1)] {
                    let u = b_mono(ctx, BMonomial::new(xy, zl));
                    let v = l.integral(&theta(&u));
                    if !v.is_zero() {
                        return Err(format!("integral(theta({u})) = {v}"));
                    }
                }
            }
        }
        Ok(())
    }));

    if ctx.p().coeffs().iter().all(Scalar::is_rational) {
        checks.push(Check::run(name(6), refs(6), || {
            let t = beta_table(ctx.p(), cfg.kmax).map_err(|e| e.to_string())?;
            for (k, row) in t.beta.iter().enumerate() {
                for (i, b) in row.iter().enumerate() {
                    if !b.is_rational() {
                        return Err(format!("beta{i}^{k} = {b}"));
                    }
                }
            }
            Ok(())
        }));
    } else {
        checks.push(Check::skipped(
            name(6),
            refs(6),
            "p has coefficients depending on q",
        ));
    }

    checks.push(Check::run(name(7), refs(7), || {
        let n = l.dim();
        let got = l.quotient_dimension(&calc, (n + 6).max(8));
        if got == n {
            Ok(())
        } else {
            Err(format!("quotient dimension {got}, expected {n}"))
        }
    }));

    if let Some(c) = example_table_check(ctx.p(), cfg.kmax.min(20)) {
        checks.push(c);
    }
    checks
}

/// Strong connections, projections, the Dirac operator and the real structure.
pub fn spin_checks(ctx: &Arc<AlgebraCtx>, cfg: &VerifyConfig) -> Vec<Check> {
    const NAMES: [(&str, &str); 4] = [
        (
            "spin.strong_connection",
            "sum of l_i r_i = 1 for l(1), l(-1)",
        ),
        (
            "spin.idempotents",
            "e(n)^2 = e(n), e(1) + e(-1) = I, e(n) from the legs of l(n)",
        ),
        (
            "spin.dirac_routes",
            "D = Clifford action after the connection",
        ),
        ("spin.dirac_grading", "D gamma = -gamma D"),
    ];
    let geo = match SpinGeometry::new(ctx, cfg.deriv.clone(), cfg.spin.clone()) {
        Ok(g) => g,
        Err(e) => {
            let reason = e.to_string();
            let ko = [
                "ko.j_squared",
                "ko.j_gamma",
                "ko.j_d",
                "ko.order_zero",
                "ko.order_one",
                "spin.commutator_d",
                "spin.star_exchange",
            ];
            return NAMES
                .iter()
                .map(|(n, r)| Check::skipped(n, r, &reason))
                .chain(
                    ko.iter()
                        .map(|n| Check::skipped(n, "real structure conditions", &reason)),
                )
                .collect();
        }
    };
    let spinors = spanning_spinors(ctx, cfg.bound);
    let mut checks = Vec::new();

    checks.push(Check::run(NAMES[0].0, NAMES[0].1, || {
        for n in [1, -1] {
            let legs = strong_connection(ctx, n).map_err(|e| e.to_string())?;
            let sum = legs
                .iter()
                .fold(AlgElem::zero(ctx), |acc, (l, r)| acc + l * r);
            expect_eq(format!("legs of l({n})"), &sum, &AlgElem::one(ctx))?;
            for (l, r) in &legs {
                if !l.is_homogeneous_of(-n as i64) || !r.is_homogeneous_of(n as i64) {
                    return Err(format!("leg {l} (x) {r} of l({n}) has the wrong degrees"));
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(NAMES[1].0, NAMES[1].1, || {
        let (e1, em1) = idempotents(ctx).map_err(|e| e.to_string())?;
        expect_eq("e(1)^2", &e1.mul(&e1), &e1)?;
        expect_eq("e(-1)^2", &em1.mul(&em1), &em1)?;
        expect_eq("e(1) + e(-1)", &e1.add(&em1), &BMatrix2::identity(ctx))?;
        expect_eq(
            "e(1) from legs",
            &idempotent_from_legs(ctx, 1).map_err(|e| e.to_string())?,
            &e1,
        )?;
        expect_eq(
            "e(-1) from legs",
            &idempotent_from_legs(ctx, -1).map_err(|e| e.to_string())?,
            &em1,
        )?;
        Ok(())
    }));

    checks.push(Check::run(NAMES[2].0, NAMES[2].1, || {
        for s in &spinors {
            let via = geo
                .dirac_via_connection(s)
                .map_err(|e| format!("D({s}): {e}"))?;
            expect_eq(format!("D({s})"), &geo.dirac(s), &via)?;
        }
        Ok(())
    }));

    checks.push(Check::run(NAMES[3].0, NAMES[3].1, || {
        for s in &spinors {
            let lhs = geo.dirac(&SpinGeometry::grading(s));
            expect_eq(
                format!("D(gamma({s}))"),
                &lhs,
                &-&SpinGeometry::grading(&geo.dirac(s)),
            )?;
        }
        Ok(())
    }));

    checks.extend(geo.verify_ko_dimension(cfg.bound));
    checks
}

/// Every suite for `p`; regular-only checks are reported as skipped when
/// `p` is not q²-separable.
pub fn verify_all(p: &ZPoly, cfg: &VerifyConfig) -> Result<Report> {
    let ctx = AlgebraCtx::new(p.clone())?;
    type Suite = fn(&Arc<AlgebraCtx>, &VerifyConfig) -> Vec<Check>;
    let suites: [Suite; 5] = [
        gwa_checks,
        derivation_checks,
        calculus_checks,
        integral_checks,
        spin_checks,
    ];
    let checks = std::thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|suite| s.spawn(|| suite(&ctx, cfg)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification suite panicked"))
            .collect()
    });
    Ok(Report::new(checks))
}
