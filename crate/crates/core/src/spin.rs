//! Spinors `A_{-1}s_+ ⊕ A_1 s_-` over `B(p;q)`: the strong connection and
//! its idempotents, the spinor connection and Clifford action, the Dirac
//! operator, the grading, and the real structure `J`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::calculus::{Calculus, OmegaElem};
use crate::derivations::{sigma, Comp, DerivParams};
use crate::error::{Error, Result};
use crate::gwa::{a_basis_of_degree, b_basis, AMonomial, BMonomial, Monomial};
use crate::gwa::{theta, AlgElem, AlgebraCtx, BElem};
use crate::scalars::{sign_on_unit_interval, Scalar};
use crate::verify::report::{expect_eq, Check};

/// Which sign pattern the real structure realises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoDimension {
    /// `J² = -1`, needs `β_-^*/β_+ < 0`.
    Two,
    /// `J² = +1`, needs `β_-^*/β_+ > 0`.
    Six,
}

impl KoDimension {
    pub fn value(self) -> u8 {
        match self {
            KoDimension::Two => 2,
            KoDimension::Six => 6,
        }
    }
}

/// Clifford weights `β_±` and the real-structure scale `ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinParams {
    pub beta_plus: Scalar,
    pub beta_minus: Scalar,
    pub nu: Scalar,
    pub ko: KoDimension,
}

impl Default for SpinParams {
    /// `(β_+, β_-, ν) = (1, -q⁻³, 1)`.
    fn default() -> Self {
        SpinParams {
            beta_plus: Scalar::one(),
            beta_minus: -Scalar::q_pow(-3),
            nu: Scalar::one(),
            ko: KoDimension::Two,
        }
    }
}

impl SpinParams {
    /// Validates `ν² = ∓q³ β_-^*/β_+`, with the sign fixed by the sign of
    /// `β_-^*/β_+` on `0 < q < 1`.
    pub fn new(beta_plus: Scalar, beta_minus: Scalar, nu: Scalar) -> Result<Self> {
        if beta_plus.is_zero() || beta_minus.is_zero() || nu.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let ratio = beta_minus.conj() / &beta_plus;
        let ko = match sign_on_unit_interval(&ratio) {
            Some(Ordering::Less) => KoDimension::Two,
            Some(_) => KoDimension::Six,
            None => {
                return Err(Error::IndefiniteSign(format!(
                    "conj(beta-)/beta+ = {ratio}"
                )))
            }
        };
        let p = SpinParams {
            beta_plus,
            beta_minus,
            nu,
            ko,
        };
        if !p.constraint_holds() {
            return Err(Error::RealStructureConstraint {
                sign: p.constraint_sign(),
            });
        }
        Ok(p)
    }

    /// Skips validation; used to build deliberately inconsistent parameters.
    pub fn unchecked(beta_plus: Scalar, beta_minus: Scalar, nu: Scalar, ko: KoDimension) -> Self {
        SpinParams {
            beta_plus,
            beta_minus,
            nu,
            ko,
        }
    }

    fn constraint_sign(&self) -> &'static str {
        match self.ko {
            KoDimension::Two => "-",
            KoDimension::Six => "+",
        }
    }

    pub fn constraint_holds(&self) -> bool {
        let rhs = Scalar::q_pow(3) * self.beta_minus.conj() / &self.beta_plus;
        let rhs = match self.ko {
            KoDimension::Two => -rhs,
            KoDimension::Six => rhs,
        };
        &self.nu * &self.nu == rhs
    }
}

/// `a s_+ + b s_-` with `|a| = -1`, `|b| = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Spinor {
    plus: AlgElem,
    minus: AlgElem,
}

impl Spinor {
    pub fn new(plus: AlgElem, minus: AlgElem) -> Result<Self> {
        if !plus.is_homogeneous_of(-1) {
            return Err(Error::SpinorDegree(format!(
                "s+ coefficient {plus} must have degree -1"
            )));
        }
        if !minus.is_homogeneous_of(1) {
            return Err(Error::SpinorDegree(format!(
                "s- coefficient {minus} must have degree 1"
            )));
        }
        Ok(Spinor { plus, minus })
    }

    pub fn zero(ctx: &Arc<AlgebraCtx>) -> Self {
        Spinor {
            plus: AlgElem::zero(ctx),
            minus: AlgElem::zero(ctx),
        }
    }

    pub fn plus_part(a: AlgElem) -> Result<Self> {
        let z = AlgElem::zero(a.ctx());
        Spinor::new(a, z)
    }

    pub fn minus_part(b: AlgElem) -> Result<Self> {
        let z = AlgElem::zero(b.ctx());
        Spinor::new(z, b)
    }

    pub fn plus(&self) -> &AlgElem {
        &self.plus
    }

    pub fn minus(&self) -> &AlgElem {
        &self.minus
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        self.plus.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Spinor {
            plus: self.plus.scale(s),
            minus: self.minus.scale(s),
        }
    }

    /// `u · s` for `u ∈ B(p;q)`.
    pub fn left_mul(&self, u: &BElem) -> Self {
        let t = theta(u);
        Spinor {
            plus: &t * &self.plus,
            minus: &t * &self.minus,
        }
    }

    /// `s · u` for `u ∈ B(p;q)`.
    pub fn right_mul(&self, u: &BElem) -> Self {
        let t = theta(u);
        Spinor {
            plus: &self.plus * &t,
            minus: &self.minus * &t,
        }
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.plus.is_zero(), self.minus.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "({})*s+", self.plus),
            (true, false) => write!(f, "({})*s-", self.minus),
            (false, false) => write!(f, "({})*s+ + ({})*s-", self.plus, self.minus),
        }
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        Spinor {
            plus: &self.plus + &rhs.plus,
            minus: &self.minus + &rhs.minus,
        }
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        Spinor {
            plus: &self.plus - &rhs.plus,
            minus: &self.minus - &rhs.minus,
        }
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor {
            plus: -&self.plus,
            minus: -&self.minus,
        }
    }
}

/// A 2×2 matrix over `B(p;q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BMatrix2 {
    pub m: [[BElem; 2]; 2],
}

impl BMatrix2 {
    pub fn identity(ctx: &Arc<AlgebraCtx>) -> Self {
        let (o, z) = (BElem::one(ctx), BElem::zero(ctx));
        BMatrix2 {
            m: [[o.clone(), z.clone()], [z, o]],
        }
    }

    pub fn mul(&self, other: &BMatrix2) -> BMatrix2 {
        let e =
            |i: usize, j: usize| &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
        BMatrix2 {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn add(&self, other: &BMatrix2) -> BMatrix2 {
        let e = |i: usize, j: usize| &self.m[i][j] + &other.m[i][j];
        BMatrix2 {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }
}

impl fmt::Display for BMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// Left legs `l_i` and right legs `r_i` of `ℓ(n) = Σ l_i ⊗ r_i`, `n = ±1`,
/// with `Σ l_i r_i = 1`, `l_i ∈ A_{-n}`, `r_i ∈ A_n`.
pub fn strong_connection(ctx: &Arc<AlgebraCtx>, n: i32) -> Result<Vec<(AlgElem, AlgElem)>> {
    assert!(
        n == 1 || n == -1,
        "strong connection values are defined for n = ±1"
    );
    let p = ctx.p();
    let p0 = p.constant_term();
    let inv = p0.recip().map_err(|_| Error::NotRegular)?;
    let (xp, xm, zp, zm) = (
        AlgElem::x_plus(ctx),
        AlgElem::x_minus(ctx),
        AlgElem::z_plus(ctx),
        AlgElem::z_minus(ctx),
    );
    let q = Scalar::q();
    Ok(if n == 1 {
        let h = AlgElem::from_zpoly(ctx, &p.rescale_q_pow(2).drop_constant_over_z());
        vec![
            ((&h * &zm).scale(&inv), zp),
            (xm.scale(&-(&q * &inv)), xp.scale(&-q.recip().unwrap())),
        ]
    } else {
        let h = AlgElem::from_zpoly(ctx, &p.drop_constant_over_z());
        vec![(zp.scale(&inv), &h * &zm), (xp.scale(&inv), xm)]
    })
}

/// `e(1)` and `e(-1)` as displayed matrices over `B(p;q)`.
pub fn idempotents(ctx: &Arc<AlgebraCtx>) -> Result<(BMatrix2, BMatrix2)> {
    let p = ctx.p();
    let p0 = p.constant_term();
    let inv = p0.recip().map_err(|_| Error::NotRegular)?;
    let b = |f: &crate::scalars::ZPoly| BElem::from_zpoly(ctx, f).scale(&inv);
    let p0c = crate::scalars::ZPoly::constant(p0.clone());
    let pq2 = p.rescale_q_pow(2);
    let h = BElem::from_zpoly(ctx, &p.drop_constant_over_z());
    let x = BElem::x(ctx).scale(&inv);
    let hy = (&h * &BElem::y(ctx)).scale(&inv);
    let e1 = BMatrix2 {
        m: [[b(&(&p0c - &pq2)), -&x], [-&hy, b(p)]],
    };
    let em1 = BMatrix2 {
        m: [[b(&pq2), x], [hy, b(&(&p0c - p))]],
    };
    Ok((e1, em1))
}

/// `e(n)_{ij} = r_i l_j` from the legs of `ℓ(n)`, mapped back into `B(p;q)`.
/// For `n = -1` the `x`-leg is taken first.
pub fn idempotent_from_legs(ctx: &Arc<AlgebraCtx>, n: i32) -> Result<BMatrix2> {
    let mut legs = strong_connection(ctx, n)?;
    if n == -1 {
        legs.reverse();
    }
    let e = |i: usize, j: usize| crate::gwa::theta_inverse(&(&legs[i].1 * &legs[j].0));
    Ok(BMatrix2 {
        m: [[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]],
    })
}

/// The spinor connection, Clifford action and Dirac operator for fixed
/// derivation and spin parameters.
pub struct SpinGeometry {
    calc: Calculus,
    params: SpinParams,
}

impl SpinGeometry {
    pub fn new(ctx: &Arc<AlgebraCtx>, deriv: DerivParams, params: SpinParams) -> Result<Self> {
        ctx.require_regular()?;
        Ok(SpinGeometry {
            calc: Calculus::new(ctx, deriv),
            params,
        })
    }

    pub fn with_defaults(ctx: &Arc<AlgebraCtx>) -> Result<Self> {
        Self::new(ctx, DerivParams::default(), SpinParams::default())
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        self.calc.ctx()
    }

    pub fn calculus(&self) -> &Calculus {
        &self.calc
    }

    pub fn params(&self) -> &SpinParams {
        &self.params
    }

    fn partial(&self, c: Comp, a: &AlgElem) -> AlgElem {
        self.calc.derivations().apply(c, a)
    }

    /// `∇(a s_+ + b s_-) = π(d(a)) ℓ(-1) s_+ + π(d(b)) ℓ(1) s_-`, expanded
    /// into (one-form, spinor) pairs in the order `∂_+(a), ∂_-(a), ∂_+(b),
    /// ∂_-(b)`, each against both legs.
    pub fn connection(&self, s: &Spinor) -> Result<Vec<(OmegaElem, Spinor)>> {
        let ctx = self.ctx();
        let mut out = Vec::new();
        for (coef, n) in [(s.plus(), -1), (s.minus(), 1)] {
            if coef.is_zero() {
                continue;
            }
            let legs = strong_connection(ctx, n)?;
            for c in [Comp::Plus, Comp::Minus] {
                let dc = self.partial(c, coef);
                for (l, r) in &legs {
                    let w = OmegaElem::single(c, &dc * &sigma(c, l));
                    let sp = if n == -1 {
                        Spinor::plus_part(r.clone())?
                    } else {
                        Spinor::minus_part(r.clone())?
                    };
                    out.push((w, sp));
                }
            }
        }
        Ok(out)
    }

    /// `(c_- ω_+ + c_+ ω_-) ▷ (a s_+ + b s_-) = β_+ c_- b s_+ + β_- c_+ a s_-`.
    pub fn clifford(&self, w: &OmegaElem, s: &Spinor) -> Result<Spinor> {
        let (c_plus, c_minus) = (w.comp(Comp::Minus), w.comp(Comp::Plus));
        if !w.comp(Comp::Zero).is_zero() {
            return Err(Error::CliffordDegree(format!("{w} has a w0 component")));
        }
        if !c_plus.is_homogeneous_of(2) || !c_minus.is_homogeneous_of(-2) {
            return Err(Error::CliffordDegree(format!(
                "{w} needs degree 2 on w- and degree -2 on w+"
            )));
        }
        Spinor::new(
            (c_minus * s.minus()).scale(&self.params.beta_plus),
            (c_plus * s.plus()).scale(&self.params.beta_minus),
        )
    }

    /// `D = ▷ ∘ ∇`, evaluated through the connection.
    pub fn dirac_via_connection(&self, s: &Spinor) -> Result<Spinor> {
        let mut out = Spinor::zero(self.ctx());
        for (w, t) in self.connection(s)? {
            out = &out + &self.clifford(&w, &t)?;
        }
        Ok(out)
    }

    /// `D(a s_+ + b s_-) = β_+ q⁻¹ ∂_+(b) s_+ + β_- q ∂_-(a) s_-`.
    pub fn dirac(&self, s: &Spinor) -> Spinor {
        Spinor {
            plus: self
                .partial(Comp::Plus, s.minus())
                .scale(&(&self.params.beta_plus * &Scalar::q_pow(-1))),
            minus: self
                .partial(Comp::Minus, s.plus())
                .scale(&(&self.params.beta_minus * &Scalar::q())),
        }
    }

    /// `γ(a s_+ + b s_-) = a s_+ - b s_-`.
    pub fn grading(s: &Spinor) -> Spinor {
        Spinor {
            plus: s.plus.clone(),
            minus: -&s.minus,
        }
    }

    /// `J(a s_+ + b s_-) = ∓ν⁻¹ b^* s_+ + ν a^* s_-`, the sign being `-` for
    /// KO-dimension two and `+` for six.
    pub fn real_structure(&self, s: &Spinor) -> Result<Spinor> {
        if !self.params.constraint_holds() {
            return Err(Error::RealStructureConstraint {
                sign: self.params.constraint_sign(),
            });
        }
        Ok(self.real_structure_unchecked(s))
    }

    fn real_structure_unchecked(&self, s: &Spinor) -> Spinor {
        let nu = &self.params.nu;
        let nu_inv = nu.recip().expect("nonzero nu");
        let lead = match self.params.ko {
            KoDimension::Two => -nu_inv,
            KoDimension::Six => nu_inv,
        };
        Spinor {
            plus: s.minus.star().scale(&lead.conj()),
            minus: s.plus.star().scale(&nu.conj()),
        }
    }

    /// `[D, u] s = D(us) - u D(s)`.
    pub fn commutator_d(&self, u: &BElem, s: &Spinor) -> Spinor {
        &self.dirac(&s.left_mul(u)) - &self.dirac(s).left_mul(u)
    }

    /// `β_+ ∂_+(u) b s_+ + β_- ∂_-(u) a s_-`.
    pub fn commutator_d_closed_form(&self, u: &BElem, s: &Spinor) -> Spinor {
        let tu = theta(u);
        Spinor {
            plus: (&self.partial(Comp::Plus, &tu) * s.minus()).scale(&self.params.beta_plus),
            minus: (&self.partial(Comp::Minus, &tu) * s.plus()).scale(&self.params.beta_minus),
        }
    }

    /// The real-structure conditions on spanning spinors and spanning
    /// `u, v ∈ B(p;q)` up to word length `bound`, plus the `∂`–`∗` exchange
    /// and commutator identities. Failures carry a counterexample.
    pub fn verify_ko_dimension(&self, bound: u32) -> Vec<Check> {
        let ctx = self.ctx().clone();
        let spinors = spanning_spinors(&ctx, bound);
        let bs: Vec<BElem> = b_basis(bound)
            .into_iter()
            .map(|m| b_mono(&ctx, m))
            .collect();
        let j = |s: &Spinor| self.real_structure_unchecked(s);
        let jvj = |v: &BElem, s: &Spinor| j(&j(s).left_mul(v));
        let ko = self.params.ko;
        let mut checks = Vec::new();

        let j2_ref = match ko {
            KoDimension::Two => "J^2 = -id",
            KoDimension::Six => "J^2 = +id",
        };
        checks.push(Check::run("ko.j_squared", j2_ref, || {
            for s in &spinors {
                let want = match ko {
                    KoDimension::Two => -s,
                    KoDimension::Six => s.clone(),
                };
                expect_eq(format!("J(J({s}))"), &j(&j(s)), &want)?;
            }
            Ok(())
        }));
        checks.push(Check::run("ko.j_gamma", "J gamma = -gamma J", || {
            for s in &spinors {
                expect_eq(
                    format!("J(gamma({s}))"),
                    &j(&Self::grading(s)),
                    &-&Self::grading(&j(s)),
                )?;
            }
            Ok(())
        }));
        checks.push(Check::run("ko.j_d", "J D = D J", || {
            for s in &spinors {
                expect_eq(format!("J(D({s}))"), &j(&self.dirac(s)), &self.dirac(&j(s)))?;
            }
            Ok(())
        }));
        checks.push(Check::run(
            "ko.order_zero",
            "[u, J v J] = 0 for u, v in B",
            || {
                for s in &spinors {
                    for u in &bs {
                        for v in &bs {
                            let lhs = &jvj(v, s).left_mul(u) - &jvj(v, &s.left_mul(u));
                            if !lhs.is_zero() {
                                return Err(format!(
                                    "u = {u}, v = {v}, s = {s}: [u, JvJ]s = {lhs}"
                                ));
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
        checks.push(Check::run(
            "ko.order_one",
            "[[D, u], J v J] = 0 for u, v in B",
            || {
                for s in &spinors {
                    for u in &bs {
                        for v in &bs {
                            let lhs = &self.commutator_d(u, &jvj(v, s))
                                - &jvj(v, &self.commutator_d(u, s));
                            if !lhs.is_zero() {
                                return Err(format!(
                                    "u = {u}, v = {v}, s = {s}: [[D,u], JvJ]s = {lhs}"
                                ));
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
        checks.push(Check::run(
            "spin.commutator_d",
            "[D, u](a s+ + b s-) = beta+ d+(u) b s+ + beta- d-(u) a s-",
            || {
                for s in &spinors {
                    for u in &bs {
                        expect_eq(
                            format!("[D, {u}]({s})"),
                            &self.commutator_d(u, s),
                            &self.commutator_d_closed_form(u, s),
                        )?;
                    }
                }
                Ok(())
            },
        ));
        checks.push(Check::run(
            "spin.star_exchange",
            "d+(c)^* = q^(|c|-2) d-(c^*), d-(c)^* = q^(|c|+2) d+(c^*)",
            || {
                if !self.calc.params().is_star_compatible() {
                    return Err("derivation parameters are not star-compatible".into());
                }
                for m in crate::gwa::a_basis(bound) {
                    let c = AlgElem::monomial(&ctx, m, Scalar::one());
                    let k = m.degree() as i32;
                    let lhs = self.partial(Comp::Plus, &c).star();
                    let rhs = self
                        .partial(Comp::Minus, &c.star())
                        .scale(&Scalar::q_pow(k - 2));
                    expect_eq(format!("d+({c})^*"), &lhs, &rhs)?;
                    let lhs = self.partial(Comp::Minus, &c).star();
                    let rhs = self
                        .partial(Comp::Plus, &c.star())
                        .scale(&Scalar::q_pow(k + 2));
                    expect_eq(format!("d-({c})^*"), &lhs, &rhs)?;
                }
                Ok(())
            },
        ));
        checks
    }
}

fn b_mono(ctx: &Arc<AlgebraCtx>, m: BMonomial) -> BElem {
    BElem::monomial(ctx, m, Scalar::one())
}

fn a_mono(ctx: &Arc<AlgebraCtx>, m: AMonomial) -> AlgElem {
    AlgElem::monomial(ctx, m, Scalar::one())
}

/// `m s_+` for basis monomials `m` of degree -1 and `m s_-` for degree 1,
/// all of word length at most `bound`.
pub fn spanning_spinors(ctx: &Arc<AlgebraCtx>, bound: u32) -> Vec<Spinor> {
    let plus = a_basis_of_degree(-1, bound)
        .into_iter()
        .map(|m| Spinor::plus_part(a_mono(ctx, m)).unwrap());
    let minus = a_basis_of_degree(1, bound)
        .into_iter()
        .map(|m| Spinor::minus_part(a_mono(ctx, m)).unwrap());
    plus.chain(minus).collect()
}
