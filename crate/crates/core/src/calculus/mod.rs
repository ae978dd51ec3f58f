//! The three-dimensional first-order calculus `(Ω, d)` on `A(p;q)`.
//!
//! `Ω` is free on `ω_-, ω_0, ω_+` as a left module, with right action
//! `ω_i a = σ_i(a) ω_i`, and `d(a) = Σ_i ∂_i(a) ω_i`.

mod linsolve;
mod witness;

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::derivations::{sigma, Comp, DerivParams, Derivations};
use crate::error::{Error, Result};
use crate::fmt_util::write_sum;
use crate::gwa::{AlgElem, AlgebraCtx, Monomial};
use crate::scalars::Scalar;

pub use linsolve::{rank, solve, solve_density, Matrix};
pub use witness::{BarTarget, BarWitness, Comb, DensityWitness};

/// `a_- ω_- + a_0 ω_0 + a_+ ω_+`, stored left-normal.
#[derive(Clone, PartialEq, Eq)]
pub struct OmegaElem {
    comps: [AlgElem; 3],
}

impl OmegaElem {
    pub fn zero(ctx: &Arc<AlgebraCtx>) -> Self {
        OmegaElem {
            comps: [AlgElem::zero(ctx), AlgElem::zero(ctx), AlgElem::zero(ctx)],
        }
    }

    /// The basis form `ω_c`.
    pub fn basis(ctx: &Arc<AlgebraCtx>, c: Comp) -> Self {
        Self::single(c, AlgElem::one(ctx))
    }

    /// `a ω_c`.
    pub fn single(c: Comp, a: AlgElem) -> Self {
        let mut w = Self::zero(a.ctx());
        w.comps[c.index()] = a;
        w
    }

    pub fn from_comps(minus: AlgElem, zero: AlgElem, plus: AlgElem) -> Self {
        OmegaElem {
            comps: [minus, zero, plus],
        }
    }

    pub fn comp(&self, c: Comp) -> &AlgElem {
        &self.comps[c.index()]
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        self.comps[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(AlgElem::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        OmegaElem {
            comps: self.comps.clone().map(|a| a.scale(s)),
        }
    }

    /// `a · w`.
    pub fn left_mul(&self, a: &AlgElem) -> Self {
        OmegaElem {
            comps: self.comps.clone().map(|c| a * &c),
        }
    }

    /// `w · a`, using `ω_i a = σ_i(a) ω_i`.
    pub fn right_act(&self, a: &AlgElem) -> Self {
        let mut out = self.clone();
        for c in Comp::ALL {
            out.comps[c.index()] = &self.comps[c.index()] * &sigma(c, a);
        }
        out
    }

    /// Zeroes the `ω_0` component (the horizontal projection `π`).
    pub fn horizontal(&self) -> Self {
        let mut out = self.clone();
        out.comps[Comp::Zero.index()] = AlgElem::zero(self.ctx());
        out
    }

    /// The `(A_2, A_{-2})` coefficients of a form in the calculus induced on
    /// `B(p;q)`: `w = a_- ω_- + a_+ ω_+` with `|a_-| = 2`, `|a_+| = -2`.
    pub fn restrict_to_b(&self) -> Result<(AlgElem, AlgElem)> {
        let ok = self.comp(Comp::Zero).is_zero()
            && self.comp(Comp::Minus).is_homogeneous_of(2)
            && self.comp(Comp::Plus).is_homogeneous_of(-2);
        if !ok {
            return Err(Error::NotInRestrictedCalculus);
        }
        Ok((
            self.comp(Comp::Minus).clone(),
            self.comp(Comp::Plus).clone(),
        ))
    }
}

impl fmt::Display for OmegaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for c in Comp::ALL {
            let w = format!("w{c}");
            for (m, v) in self.comp(c).terms() {
                let s = if *m == Monomial::unit() {
                    w.clone()
                } else {
                    format!("{m}*{w}")
                };
                terms.push((v.clone(), s));
            }
        }
        write_sum(f, &terms)
    }
}

impl fmt::Debug for OmegaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &OmegaElem {
    type Output = OmegaElem;
    fn add(self, rhs: &OmegaElem) -> OmegaElem {
        OmegaElem {
            comps: [0, 1, 2].map(|i| &self.comps[i] + &rhs.comps[i]),
        }
    }
}

impl Sub for &OmegaElem {
    type Output = OmegaElem;
    fn sub(self, rhs: &OmegaElem) -> OmegaElem {
        OmegaElem {
            comps: [0, 1, 2].map(|i| &self.comps[i] - &rhs.comps[i]),
        }
    }
}

impl Neg for &OmegaElem {
    type Output = OmegaElem;
    fn neg(self) -> OmegaElem {
        OmegaElem {
            comps: self.comps.clone().map(|a| -a),
        }
    }
}

macro_rules! omega_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for OmegaElem {
            type Output = OmegaElem;
            fn $m(self, rhs: OmegaElem) -> OmegaElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&OmegaElem> for OmegaElem {
            type Output = OmegaElem;
            fn $m(self, rhs: &OmegaElem) -> OmegaElem {
                (&self).$m(rhs)
            }
        }
    };
}

omega_owned!(Add, add);
omega_owned!(Sub, sub);

/// The calculus `(Ω, d)` for fixed `α_0, α_±`.
pub struct Calculus {
    derivs: Derivations,
}

impl Calculus {
    pub fn new(ctx: &Arc<AlgebraCtx>, params: DerivParams) -> Self {
        Calculus {
            derivs: Derivations::new(ctx, params),
        }
    }

    pub fn with_defaults(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::new(ctx, DerivParams::default())
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        self.derivs.ctx()
    }

    pub fn derivations(&self) -> &Derivations {
        &self.derivs
    }

    pub fn params(&self) -> &DerivParams {
        self.derivs.params()
    }

    pub fn d(&self, a: &AlgElem) -> OmegaElem {
        OmegaElem {
            comps: Comp::ALL.map(|c| self.derivs.apply(c, a)),
        }
    }

    /// `Σ a_i d(b_i)`.
    pub fn eval_pairs(&self, pairs: &[(AlgElem, AlgElem)]) -> OmegaElem {
        pairs
            .iter()
            .fold(OmegaElem::zero(self.ctx()), |acc, (a, b)| {
                acc + self.d(b).left_mul(a)
            })
    }

    /// The ∗-operation with `ω_±^* = ω_∓`, `ω_0^* = -ω_0`.
    pub fn star_omega(&self, w: &OmegaElem) -> Result<OmegaElem> {
        if !self.params().is_star_compatible() {
            return Err(Error::NotStarCompatible);
        }
        // (a ω_i)^* = ω_i^* a^* = σ_{i*}(a^*) ω_i^*
        Ok(OmegaElem::from_comps(
            sigma(Comp::Minus, &w.comp(Comp::Plus).star()),
            -sigma(Comp::Zero, &w.comp(Comp::Zero).star()),
            sigma(Comp::Plus, &w.comp(Comp::Minus).star()),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gwa::{theta, BElem};
    use crate::scalars::ZPoly;

    fn setup() -> (Arc<AlgebraCtx>, Calculus) {
        let ctx = AlgebraCtx::new(ZPoly::from_ints(&[-1, 0, 1])).unwrap();
        let calc = Calculus::with_defaults(&ctx);
        (ctx, calc)
    }

    #[test]
    fn right_action_examples() {
        let (ctx, _) = setup();
        let wm = OmegaElem::basis(&ctx, Comp::Minus);
        let zp = AlgElem::z_plus(&ctx);
        assert_eq!(
            wm.right_act(&zp),
            OmegaElem::single(Comp::Minus, zp.scale(&Scalar::q()))
        );
        let w0 = OmegaElem::basis(&ctx, Comp::Zero);
        let xm = AlgElem::x_minus(&ctx);
        assert_eq!(
            w0.right_act(&xm),
            OmegaElem::single(Comp::Zero, xm.scale(&Scalar::q_pow(-2)))
        );
        assert_eq!(w0.right_act(&AlgElem::one(&ctx)), w0);
    }

    #[test]
    fn d_examples() {
        let (ctx, calc) = setup();
        let a = calc.params().clone();
        let zp = AlgElem::z_plus(&ctx);
        let xm = AlgElem::x_minus(&ctx);
        let expected = OmegaElem::from_comps(
            AlgElem::zero(&ctx),
            zp.scale(a.alpha0()),
            xm.scale(a.alpha_plus()),
        );
        assert_eq!(calc.d(&zp), expected);
        assert!(calc.d(&AlgElem::one(&ctx)).is_zero());
        let xp = AlgElem::x_plus(&ctx);
        let zm = AlgElem::z_minus(&ctx);
        let dz = OmegaElem::from_comps(
            (&zp * &xp).scale(a.alpha_minus()),
            AlgElem::zero(&ctx),
            (&zm * &xm).scale(a.alpha_plus()),
        );
        assert_eq!(calc.d(&theta(&BElem::z(&ctx))), dz);
        assert_eq!(
            calc.d(&zp).horizontal(),
            OmegaElem::single(Comp::Plus, xm.scale(a.alpha_plus()))
        );
    }

    #[test]
    fn star_on_forms() {
        let (ctx, calc) = setup();
        let w0 = OmegaElem::basis(&ctx, Comp::Zero);
        assert_eq!(calc.star_omega(&w0).unwrap(), -&w0);
        for g in [
            AlgElem::x_plus(&ctx),
            AlgElem::z_minus(&ctx),
            AlgElem::x_minus(&ctx) * AlgElem::z_plus(&ctx),
        ] {
            assert_eq!(calc.d(&g.star()), calc.star_omega(&calc.d(&g)).unwrap());
        }
        let bad = Calculus::new(
            &ctx,
            DerivParams::new(Scalar::one(), Scalar::one(), Scalar::one()).unwrap(),
        );
        assert_eq!(bad.star_omega(&w0).unwrap_err(), Error::NotStarCompatible);
    }

    #[test]
    fn restriction_to_b() {
        let (ctx, calc) = setup();
        let a = calc.params().clone();
        let (zp, xp, xm, zm) = (
            AlgElem::z_plus(&ctx),
            AlgElem::x_plus(&ctx),
            AlgElem::x_minus(&ctx),
            AlgElem::z_minus(&ctx),
        );
        let c = AlgElem::from_zpoly(&ctx, ctx.c());
        let (m, p) = calc.d(&theta(&BElem::x(&ctx))).restrict_to_b().unwrap();
        assert_eq!(m, (&c * &zp.pow(2)).scale(&(Scalar::q() * a.alpha_minus())));
        assert_eq!(p, xm.pow(2).scale(a.alpha_plus()));
        let (m, p) = calc.d(&theta(&BElem::y(&ctx))).restrict_to_b().unwrap();
        assert_eq!(m, xp.pow(2).scale(&(Scalar::q() * a.alpha_minus())));
        assert_eq!(p, (&c * &zm.pow(2)).scale(a.alpha_plus()));
        let (m, p) = calc.d(&AlgElem::one(&ctx)).restrict_to_b().unwrap();
        assert!(m.is_zero() && p.is_zero());
        assert_eq!(
            calc.d(&zp).restrict_to_b().unwrap_err(),
            Error::NotInRestrictedCalculus
        );
    }
}
