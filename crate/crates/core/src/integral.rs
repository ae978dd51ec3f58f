//! Right-linear covectors on `Ω`, the divergence, and the integral `Λ`
//! spanning its `deg p`-dimensional space of integrals.

use std::fmt;
use std::sync::Arc;

use crate::calculus::{rank, Calculus, Matrix, OmegaElem};
use crate::derivations::{sigma_pow, Comp};
use crate::error::{Error, Result};
use crate::fmt_util::write_sum;
use crate::gwa::{AMonomial, AlgElem, AlgebraCtx};
use crate::scalars::{q_integer, Scalar, ZPoly};

/// A right `A`-linear map `Ω → A`, stored through its values on `ω_-, ω_0, ω_+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoVector {
    vals: [AlgElem; 3],
}

impl CoVector {
    pub fn new(minus: AlgElem, zero: AlgElem, plus: AlgElem) -> Self {
        CoVector {
            vals: [minus, zero, plus],
        }
    }

    /// The dual covector `ξ_c` with `ξ_c(ω_j) = δ_{cj}`.
    pub fn dual(ctx: &Arc<AlgebraCtx>, c: Comp) -> Self {
        let mut vals = [AlgElem::zero(ctx), AlgElem::zero(ctx), AlgElem::zero(ctx)];
        vals[c.index()] = AlgElem::one(ctx);
        CoVector { vals }
    }

    pub fn val(&self, c: Comp) -> &AlgElem {
        &self.vals[c.index()]
    }

    /// `ξ(Σ a_i ω_i) = Σ ξ(ω_i) σ_i⁻¹(a_i)`.
    pub fn eval(&self, w: &OmegaElem) -> AlgElem {
        let mut out = AlgElem::zero(w.ctx());
        for c in Comp::ALL {
            out = out + self.val(c) * &sigma_pow(c, w.comp(c), -1);
        }
        out
    }

    /// `ξ·a : ω ↦ ξ(aω)`.
    pub fn right_mul(&self, a: &AlgElem) -> Self {
        CoVector {
            vals: Comp::ALL.map(|c| self.val(c) * &sigma_pow(c, a, -1)),
        }
    }

    /// `a·ξ : ω ↦ aξ(ω)`.
    pub fn left_mul(&self, a: &AlgElem) -> Self {
        CoVector {
            vals: self.vals.clone().map(|v| a * &v),
        }
    }
}

impl fmt::Display for CoVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(w- -> {}, w0 -> {}, w+ -> {})",
            self.vals[0], self.vals[1], self.vals[2]
        )
    }
}

/// `div(ξ) = q⁻² ∂_-(ξ(ω_-)) + ∂_0(ξ(ω_0)) + q² ∂_+(ξ(ω_+))`.
pub fn divergence(calc: &Calculus, xi: &CoVector) -> AlgElem {
    let d = calc.derivations();
    d.apply(Comp::Minus, xi.val(Comp::Minus))
        .scale(&Scalar::q_pow(-2))
        + d.apply(Comp::Zero, xi.val(Comp::Zero))
        + d.apply(Comp::Plus, xi.val(Comp::Plus))
            .scale(&Scalar::q_pow(2))
}

/// Coefficients over `v_i = Λ(z^i)`, `0 ≤ i < deg p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralValue {
    pub coeffs: Vec<Scalar>,
}

impl IntegralValue {
    pub fn zero(n: usize) -> Self {
        IntegralValue {
            coeffs: vec![Scalar::zero(); n],
        }
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[i] = Scalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn add_scaled(&mut self, other: &IntegralValue, s: &Scalar) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = &*a + &(b * s);
        }
    }
}

impl fmt::Display for IntegralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Scalar, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), format!("v{i}")))
            .collect();
        write_sum(f, &terms)
    }
}

/// `μ_i` from `p / lc(p) = z^n − Σ μ_i z^i` and the coefficients `β_i^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaTable {
    pub mu: Vec<Scalar>,
    /// `beta[k][i] = β_i^k`.
    pub beta: Vec<Vec<Scalar>>,
}

impl BetaTable {
    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn get(&self, k: usize, i: usize) -> &Scalar {
        &self.beta[k][i]
    }
}

/// Fills `β_i^k = Σ_{j=1}^n μ_{n−j} β_i^{k−j} + μ_{i−k}` for `k ≤ kmax`, with
/// `μ_l = β_i^l = 0` for `l < 0`.
pub fn beta_table(p: &ZPoly, kmax: usize) -> Result<BetaTable> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let mu = p.monic_tail();
    let mut beta: Vec<Vec<Scalar>> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let row = (0..n)
            .map(|i| {
                let mut s = if i >= k {
                    mu[i - k].clone()
                } else {
                    Scalar::zero()
                };
                for j in 1..=n.min(k) {
                    s = s + &mu[n - j] * &beta[k - j][i];
                }
                s
            })
            .collect();
        beta.push(row);
    }
    Ok(BetaTable { mu, beta })
}

/// The integral `Λ : A(p;q) → ℚ(q)^n`, normalised by `Λ(z^i) = v_i` for `i < n`.
pub struct Integral {
    ctx: Arc<AlgebraCtx>,
    n: usize,
    mu: Vec<Scalar>,
}

fn z_power(m: &AMonomial) -> Option<usize> {
    (m.x == 0 && m.zplus == m.zminus).then_some(m.zplus as usize)
}

impl Integral {
    pub fn new(ctx: &Arc<AlgebraCtx>) -> Result<Self> {
        ctx.require_regular()?;
        let n = ctx.p().degree().expect("nonzero p");
        if n == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(Integral {
            ctx: ctx.clone(),
            n,
            mu: ctx.p().monic_tail(),
        })
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        &self.ctx
    }

    /// `dim` of the integral space, `deg p`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &[Scalar] {
        &self.mu
    }

    /// `Λ(z^k)` for `0 ≤ k ≤ kmax` from the closed form
    /// `Λ(z^{n+k}) = Σ_i [i+1]/[n+k+1] β_i^k v_i`.
    pub fn z_powers(&self, kmax: usize) -> Vec<IntegralValue> {
        let n = self.n;
        let table = (kmax >= n).then(|| beta_table(self.ctx.p(), kmax - n).expect("nonconstant p"));
        (0..=kmax)
            .map(|k| {
                if k < n {
                    return IntegralValue::unit(n, k);
                }
                let t = table.as_ref().unwrap();
                let den = q_integer(k as u32 + 1);
                IntegralValue {
                    coeffs: (0..n)
                        .map(|i| q_integer(i as u32 + 1) * t.get(k - n, i) / &den)
                        .collect(),
                }
            })
            .collect()
    }

    /// `Λ(z^k)` for `0 ≤ k ≤ kmax` by iterating
    /// `Λ(z^{n+k}) = Σ_i [i+k+1]/[n+k+1] μ_i Λ(z^{k+i})`.
    pub fn z_powers_by_recurrence(&self, kmax: usize) -> Vec<IntegralValue> {
        let n = self.n;
        let mut out: Vec<IntegralValue> = Vec::with_capacity(kmax + 1);
        for m in 0..=kmax {
            if m < n {
                out.push(IntegralValue::unit(n, m));
                continue;
            }
            let k = m - n;
            let den = q_integer(m as u32 + 1);
            let mut v = IntegralValue::zero(n);
            for i in 0..n {
                let s = q_integer((i + k + 1) as u32) * &self.mu[i] / &den;
                v.add_scaled(&out[k + i], &s);
            }
            out.push(v);
        }
        out
    }

    fn linear(&self, a: &AlgElem, powers: impl Fn(usize) -> Vec<IntegralValue>) -> IntegralValue {
        assert!(
            self.ctx.same_as(a.ctx()),
            "element belongs to a different algebra"
        );
        let kmax = a.terms().keys().filter_map(z_power).max();
        let mut out = IntegralValue::zero(self.n);
        if let Some(kmax) = kmax {
            let table = powers(kmax);
            for (m, c) in a.terms() {
                if let Some(k) = z_power(m) {
                    out.add_scaled(&table[k], c);
                }
            }
        }
        out
    }

    /// `Λ(a)`: zero on basis monomials other than powers of `z = z_+z_-`.
    pub fn integral(&self, a: &AlgElem) -> IntegralValue {
        self.linear(a, |k| self.z_powers(k))
    }

    /// `Λ(a)` computed through the order-`n` recurrence instead of the `β`
    /// closed form.
    pub fn integral_by_recurrence(&self, a: &AlgElem) -> IntegralValue {
        self.linear(a, |k| self.z_powers_by_recurrence(k))
    }

    /// `Λ(q² p(q²z) f(q²z)) = Λ(p(z) f(z))`.
    pub fn check_lambda_functional(&self, f: &ZPoly) -> bool {
        let p = self.ctx.p();
        let lhs = (&p.rescale_q_pow(2) * &f.rescale_q_pow(2)).scale(&Scalar::q_pow(2));
        let rhs = p * f;
        self.integral(&AlgElem::from_zpoly(&self.ctx, &lhs))
            == self.integral(&AlgElem::from_zpoly(&self.ctx, &rhs))
    }

    /// `dim span{1, …, z^bound} / (span{1, …, z^bound} ∩ div(…))`, where the
    /// divergences range over the covectors `x_-z_-z^j ξ_-` and
    /// `x_+z_+z^j ξ_+` whose images have z-degree at most `bound`.
    pub fn quotient_dimension(&self, calc: &Calculus, bound: usize) -> usize {
        let ctx = &self.ctx;
        let mut cols = Vec::new();
        for j in 0..=bound.saturating_sub(self.n) {
            let zj = AlgElem::from_zpoly(ctx, &ZPoly::monomial(Scalar::one(), j));
            let lo = AlgElem::x_minus(ctx) * AlgElem::z_minus(ctx) * &zj;
            let hi = AlgElem::x_plus(ctx) * AlgElem::z_plus(ctx) * &zj;
            let zero = AlgElem::zero(ctx);
            for xi in [
                CoVector::new(lo, zero.clone(), zero.clone()),
                CoVector::new(zero.clone(), zero, hi),
            ] {
                let poly = divergence(calc, &xi)
                    .to_zpoly()
                    .expect("divergence of these covectors lies in k[z]");
                cols.push((0..=bound).map(|i| poly.coeff(i)).collect::<Vec<_>>());
            }
        }
        bound + 1 - rank(&Matrix::from_columns(bound + 1, &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: &[i64]) -> Arc<AlgebraCtx> {
        AlgebraCtx::new(ZPoly::from_ints(p)).unwrap()
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_int(k)
    }

    #[test]
    fn dual_covectors_are_divergence_free() {
        let c = ctx(&[-1, 0, 1]);
        let calc = Calculus::with_defaults(&c);
        for k in Comp::ALL {
            assert!(divergence(&calc, &CoVector::dual(&c, k)).is_zero());
        }
    }

    #[test]
    fn divergence_examples() {
        let c = ctx(&[-1, 0, 1]);
        let calc = Calculus::with_defaults(&c);
        let xp = AlgElem::x_plus(&c);
        let xi = CoVector::dual(&c, Comp::Zero).right_mul(&xp);
        assert_eq!(xi.val(Comp::Zero), &xp.scale(&Scalar::q_pow(-2)));
        assert_eq!(
            divergence(&calc, &xi),
            xp.scale(&(Scalar::q_pow(-2) * calc.params().alpha0()))
        );

        let zero = AlgElem::zero(&c);
        let lo = AlgElem::x_minus(&c) * AlgElem::z_minus(&c);
        let got = divergence(&calc, &CoVector::new(lo, zero.clone(), zero));
        let p = c.p();
        let f = (&p.rescale_q_pow(2).scale(&Scalar::q_pow(2)) - p)
            .scale(&(Scalar::q_pow(-2) * calc.params().alpha_minus() / &(Scalar::q_pow(2) - s(1))));
        assert_eq!(got, AlgElem::from_zpoly(&c, &f));
    }

    #[test]
    fn covector_evaluation() {
        let c = ctx(&[1, -2, 1]);
        let calc = Calculus::with_defaults(&c);
        let xi = CoVector::new(AlgElem::z_plus(&c), AlgElem::x_minus(&c), AlgElem::one(&c));
        let a = AlgElem::x_plus(&c) * AlgElem::z_minus(&c);
        let w = calc.d(&AlgElem::z_plus(&c));
        // (ξ·a)(w) = ξ(a w)
        assert_eq!(xi.right_mul(&a).eval(&w), xi.eval(&w.left_mul(&a)));
        // ξ(w a) = ξ(w) a
        assert_eq!(xi.eval(&w.right_act(&a)), xi.eval(&w) * &a);
    }

    #[test]
    fn beta_examples() {
        let t = beta_table(&ZPoly::from_ints(&[-1, 0, 1]), 8).unwrap();
        assert_eq!(t.get(0, 0), &s(1));
        assert_eq!(t.get(1, 1), &s(1));
        assert!(t.get(1, 0).is_zero() && t.get(0, 1).is_zero());
        for k in 2..=8 {
            assert_eq!(t.beta[k], t.beta[k - 2]);
        }
        let t = beta_table(&ZPoly::from_ints(&[1, -2, 1]), 20).unwrap();
        for k in 0..=20i64 {
            assert_eq!(t.get(k as usize, 0), &s(-(k + 1)));
            assert_eq!(t.get(k as usize, 1), &s(k + 2));
        }
        assert_eq!(t.get(5, 0), &s(-6));
        assert_eq!(t.get(5, 1), &s(7));
        assert_eq!(
            beta_table(&ZPoly::from_ints(&[3]), 4).unwrap_err(),
            Error::ConstantPolynomial
        );
    }

    #[test]
    fn integral_examples() {
        let c = ctx(&[-1, 0, 1]);
        let l = Integral::new(&c).unwrap();
        let z2 = AlgElem::from_zpoly(&c, &ZPoly::from_ints(&[0, 0, 1]));
        assert_eq!(
            l.integral(&z2).coeffs,
            vec![q_integer(3).recip().unwrap(), s(0)]
        );
        assert!(l
            .integral(&(AlgElem::x_plus(&c) * AlgElem::z_plus(&c)))
            .is_zero());
        assert_eq!(l.integral(&AlgElem::one(&c)), IntegralValue::unit(2, 0));

        let c = ctx(&[1, -2, 1]);
        let l = Integral::new(&c).unwrap();
        for (k, v) in l.z_powers(12).iter().enumerate() {
            let kq = q_integer(k as u32 + 1);
            let want = vec![s(1 - k as i64) / &kq, q_integer(2) * s(k as i64) / &kq];
            assert_eq!(v.coeffs, want, "k = {k}");
        }
        assert_eq!(Integral::new(&ctx(&[0, 1])).err(), Some(Error::NotRegular));
        assert_eq!(
            Integral::new(&ctx(&[2])).err(),
            Some(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for p in [&[-1, 0, 1][..], &[1, -2, 1], &[-1, -1, 0, 1]] {
            let l = Integral::new(&ctx(p)).unwrap();
            assert_eq!(l.z_powers(30), l.z_powers_by_recurrence(30), "p = {p:?}");
        }
    }

    #[test]
    fn lambda_functional_and_quotient() {
        for p in [&[-1, 0, 1][..], &[1, -2, 1], &[1, -1]] {
            let c = ctx(p);
            let l = Integral::new(&c).unwrap();
            for f in [
                ZPoly::zero(),
                ZPoly::from_ints(&[0, 0, 0, 1]),
                ZPoly::from_ints(&[2, -1, 0, 5]),
            ] {
                assert!(l.check_lambda_functional(&f));
            }
            let calc = Calculus::with_defaults(&c);
            assert_eq!(l.quotient_dimension(&calc, 8), p.len() - 1);
        }
    }
}
