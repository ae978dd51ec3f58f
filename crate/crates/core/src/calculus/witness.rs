//! Explicit expressions of basis one-forms as `Σ a·d(b)·c`, built from
//! Bézout cofactors of the q²-separability certificate.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{Calculus, OmegaElem};
use crate::derivations::Comp;
use crate::error::{Error, Result};
use crate::gwa::{theta, AlgElem, AlgebraCtx, BElem, Element, Gen, Monomial};
use crate::scalars::{Scalar, ZPoly};

/// A formal sum `Σ u_i · d(g_i) · v_i` with `u_i, v_i ∈ Element<M>`.
#[derive(Clone, Debug)]
pub struct Comb<M: Monomial, D: Clone> {
    pub terms: Vec<(Element<M>, D, Element<M>)>,
}

impl<M: Monomial, D: Clone> Comb<M, D> {
    pub fn empty() -> Self {
        Comb { terms: Vec::new() }
    }

    /// `d(g)`.
    pub fn d(ctx: &Arc<AlgebraCtx>, g: D) -> Self {
        Comb {
            terms: vec![(Element::one(ctx), g, Element::one(ctx))],
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Comb {
            terms: self
                .terms
                .iter()
                .map(|(u, g, v)| (u.scale(s), g.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn left(&self, a: &Element<M>) -> Self {
        Comb {
            terms: self
                .terms
                .iter()
                .map(|(u, g, v)| (a * u, g.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn right(&self, a: &Element<M>) -> Self {
        Comb {
            terms: self
                .terms
                .iter()
                .map(|(u, g, v)| (u.clone(), g.clone(), v * a))
                .collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Comb { terms }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-Scalar::one()))
    }

    /// Drops terms with a vanishing outer factor.
    fn pruned(self) -> Self {
        Comb {
            terms: self
                .terms
                .into_iter()
                .filter(|(u, _, v)| !u.is_zero() && !v.is_zero())
                .collect(),
        }
    }
}

/// An expression of `ω_-`, `ω_0` or `ω_+` as `Σ a_i d(b_i)`.
#[derive(Clone, Debug)]
pub struct DensityWitness {
    pub target: Comp,
    pub pairs: Vec<(AlgElem, AlgElem)>,
    /// Built from the formulas specific to `deg p ≤ 1`.
    pub linear_branch: bool,
}

/// The six generators of the calculus restricted to `B(p;q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarTarget {
    ZPlusSqOmegaMinus,
    XPlusSqOmegaMinus,
    ZPlusXPlusOmegaMinus,
    ZMinusSqOmegaPlus,
    XMinusSqOmegaPlus,
    ZMinusXMinusOmegaPlus,
}

impl BarTarget {
    pub const ALL: [BarTarget; 6] = [
        BarTarget::ZPlusSqOmegaMinus,
        BarTarget::XPlusSqOmegaMinus,
        BarTarget::ZPlusXPlusOmegaMinus,
        BarTarget::ZMinusSqOmegaPlus,
        BarTarget::XMinusSqOmegaPlus,
        BarTarget::ZMinusXMinusOmegaPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BarTarget::ZPlusSqOmegaMinus => "z+^2*w-",
            BarTarget::XPlusSqOmegaMinus => "x+^2*w-",
            BarTarget::ZPlusXPlusOmegaMinus => "z+*x+*w-",
            BarTarget::ZMinusSqOmegaPlus => "z-^2*w+",
            BarTarget::XMinusSqOmegaPlus => "x-^2*w+",
            BarTarget::ZMinusXMinusOmegaPlus => "z-*x-*w+",
        }
    }

    /// The target as a one-form on `A(p;q)`.
    pub fn form(self, ctx: &Arc<AlgebraCtx>) -> OmegaElem {
        let (xp, xm, zp, zm) = (
            AlgElem::x_plus(ctx),
            AlgElem::x_minus(ctx),
            AlgElem::z_plus(ctx),
            AlgElem::z_minus(ctx),
        );
        match self {
            BarTarget::ZPlusSqOmegaMinus => OmegaElem::single(Comp::Minus, zp.pow(2)),
            BarTarget::XPlusSqOmegaMinus => OmegaElem::single(Comp::Minus, xp.pow(2)),
            BarTarget::ZPlusXPlusOmegaMinus => OmegaElem::single(Comp::Minus, zp * xp),
            BarTarget::ZMinusSqOmegaPlus => OmegaElem::single(Comp::Plus, zm.pow(2)),
            BarTarget::XMinusSqOmegaPlus => OmegaElem::single(Comp::Plus, xm.pow(2)),
            BarTarget::ZMinusXMinusOmegaPlus => OmegaElem::single(Comp::Plus, zm * xm),
        }
    }
}

impl fmt::Display for BarTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BarTarget {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        BarTarget::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| format!("unknown target '{s}'; expected one of z+^2*w-, x+^2*w-, z+*x+*w-, z-^2*w+, x-^2*w+, z-*x-*w+"))
    }
}

/// An expression of a generator of `Ω̄` as `Σ u_i d(g_i) v_i` over `B(p;q)`.
#[derive(Clone, Debug)]
pub struct BarWitness {
    pub target: BarTarget,
    pub terms: Vec<(BElem, Gen, BElem)>,
    pub linear_branch: bool,
}

type AComb = Comb<crate::gwa::AMonomial, AlgElem>;
type BComb = Comb<crate::gwa::BMonomial, Gen>;

fn inv(s: &Scalar) -> Scalar {
    s.recip().expect("nonzero parameter")
}

/// `a d(b) c = a d(bc) - ab d(c)`.
fn to_pairs(comb: AComb) -> Vec<(AlgElem, AlgElem)> {
    let mut out = Vec::new();
    for (a, b, c) in comb.pruned().terms {
        if c == AlgElem::one(c.ctx()) {
            out.push((a, b));
        } else {
            out.push((a.clone(), &b * &c));
            out.push((-(&a * &b), c));
        }
    }
    out.retain(|(a, b)| !a.is_zero() && b.max_word_len() > 0);
    out
}

impl Calculus {
    /// `Σ u d(b) v` on `A(p;q)`.
    pub fn eval_comb(&self, comb: &AComb) -> OmegaElem {
        comb.terms
            .iter()
            .fold(OmegaElem::zero(self.ctx()), |acc, (u, b, v)| {
                acc + self.d(b).left_mul(u).right_act(v)
            })
    }

    /// `Σ Θ(u) d(Θ(g)) Θ(v)` for a combination over `B(p;q)`.
    pub fn eval_bar(&self, terms: &[(BElem, Gen, BElem)]) -> OmegaElem {
        let ctx = self.ctx();
        terms.iter().fold(OmegaElem::zero(ctx), |acc, (u, g, v)| {
            let gb = g.to_b(ctx).expect("generator of B(p;q)");
            acc + self.d(&theta(&gb)).left_mul(&theta(u)).right_act(&theta(v))
        })
    }

    fn linear_coeffs(&self) -> Option<(Scalar, Scalar)> {
        let p = self.ctx().p();
        (p.degree()? <= 1).then(|| (p.coeff(1), p.coeff(0)))
    }

    fn omega0_comb(&self) -> Result<(AComb, bool)> {
        let ctx = self.ctx();
        let cert = ctx.require_regular()?;
        let a0 = self.params().alpha0().clone();
        let (xp, xm, zp, zm) = (
            AlgElem::x_plus(ctx),
            AlgElem::x_minus(ctx),
            AlgElem::z_plus(ctx),
            AlgElem::z_minus(ctx),
        );
        let d = |g: &AlgElem| AComb::d(ctx, g.clone());
        let q = Scalar::q();
        if let Some((lambda, mu)) = self.linear_coeffs() {
            // x_- d(x_+) - q²λ z_- d(z_+) = α_0 μ ω_0
            let comb = d(&xp)
                .left(&xm)
                .minus(&d(&zp).left(&zm).scale(&(&q * &q * &lambda)));
            return Ok((comb.scale(&inv(&(&a0 * &mu))), true));
        }
        // z_- d(z_+) - d(z_+) z_- = (1 - q⁻²) α_0 z ω_0
        let z_w0 = d(&zp)
            .left(&zm)
            .minus(&d(&zp).right(&zm))
            .scale(&inv(&((Scalar::one() - Scalar::q_pow(-2)) * &a0)));
        // d(x_+)x_- - q⁻¹c z_- d(z_+) + q² x_+ d(x_-) - q z_+ d(z_-) c = (q⁻² - 1) α_0 p(z) ω_0
        let c = AlgElem::from_zpoly(ctx, ctx.c());
        let p_w0 = d(&xp)
            .right(&xm)
            .minus(&d(&zp).left(&(&c * &zm)).scale(&Scalar::q_pow(-1)))
            .plus(&d(&xm).left(&xp).scale(&Scalar::q_pow(2)))
            .minus(&d(&zm).left(&zp).right(&c).scale(&q))
            .scale(&inv(&((Scalar::q_pow(-2) - Scalar::one()) * &a0)));
        let f0 = AlgElem::from_zpoly(ctx, &cert.f0);
        let g0 = AlgElem::from_zpoly(ctx, &cert.g0);
        Ok((z_w0.left(&f0).plus(&p_w0.left(&g0)), false))
    }

    fn omega_pm_comb(&self, target: Comp) -> Result<(AComb, bool)> {
        let ctx = self.ctx();
        let cert = ctx.require_regular()?.clone();
        let (w0, linear) = self.omega0_comb()?;
        let a0 = self.params().alpha0().clone();
        let (xp, xm, zp, zm) = (
            AlgElem::x_plus(ctx),
            AlgElem::x_minus(ctx),
            AlgElem::z_plus(ctx),
            AlgElem::z_minus(ctx),
        );
        let d = |g: &AlgElem| AComb::d(ctx, g.clone());
        let q = Scalar::q();
        let (zc_w, p_w) = match target {
            Comp::Plus => {
                let ap = inv(self.params().alpha_plus());
                // α_+ z c(z) ω_+ = z_+ d(x_+) - α_0 z_+ x_+ ω_0
                let zc = d(&xp)
                    .left(&zp)
                    .minus(&w0.left(&(&zp * &xp)).scale(&a0))
                    .scale(&ap);
                // α_+ p(z) ω_+ = x_+ d(z_+) - α_0 x_+ z_+ ω_0
                let pw = d(&zp)
                    .left(&xp)
                    .minus(&w0.left(&(&xp * &zp)).scale(&a0))
                    .scale(&ap);
                (zc, pw)
            }
            Comp::Minus => {
                let am = &q * &inv(self.params().alpha_minus());
                let t = Scalar::q_pow(-2) * &a0;
                // q⁻¹ α_- z c(z) ω_- = d(x_-) z_- + q⁻² α_0 x_- ω_0 z_-
                let zc = d(&xm)
                    .right(&zm)
                    .plus(&w0.left(&xm).right(&zm).scale(&t))
                    .scale(&am);
                // q⁻¹ α_- p(z) ω_- = d(z_-) x_- + q⁻² α_0 z_- ω_0 x_-
                let pw = d(&zm)
                    .right(&xm)
                    .plus(&w0.left(&zm).right(&xm).scale(&t))
                    .scale(&am);
                (zc, pw)
            }
            Comp::Zero => unreachable!(),
        };
        // f p + (g/q) z c = 1
        let f = AlgElem::from_zpoly(ctx, &cert.f);
        let g = AlgElem::from_zpoly(ctx, &cert.g.scale(&inv(&q)));
        Ok((p_w.left(&f).plus(&zc_w.left(&g)), linear))
    }

    /// Expresses `ω_target` as `Σ a_i d(b_i)`; the result is evaluated
    /// before it is returned.
    pub fn density_witness(&self, target: Comp) -> Result<DensityWitness> {
        let (comb, linear_branch) = match target {
            Comp::Zero => self.omega0_comb()?,
            _ => self.omega_pm_comb(target)?,
        };
        let pairs = to_pairs(comb);
        let want = OmegaElem::basis(self.ctx(), target);
        let got = self.eval_pairs(&pairs);
        if got != want {
            return Err(Error::WitnessMismatch(format!("w{target}: got {got}")));
        }
        Ok(DensityWitness {
            target,
            pairs,
            linear_branch,
        })
    }

    fn bar_comb(&self, target: BarTarget) -> Result<(BComb, bool)> {
        let ctx = self.ctx();
        let cert = ctx.require_regular()?.clone();
        let (x, y, z) = (BElem::x(ctx), BElem::y(ctx), BElem::z(ctx));
        let dx = BComb::d(ctx, Gen::X);
        let dy = BComb::d(ctx, Gen::Y);
        let dz = BComb::d(ctx, Gen::Z);
        let q = Scalar::q();
        let am = self.params().alpha_minus().clone();
        let ap = self.params().alpha_plus().clone();
        let c = BElem::from_zpoly(ctx, ctx.c());
        let bz = |f: &ZPoly| BElem::from_zpoly(ctx, f);
        let one = Scalar::one();

        let linear = self.linear_coeffs();
        let zp2_wm: BComb;
        let zm2_wp: BComb;
        let zmxm_wp: BComb;
        let zpxp_wm: Option<BComb>;
        if let Some((lambda, mu)) = &linear {
            // α_- μ z_+² ω_- = d(z) x - q⁻² d(x) z
            zp2_wm = dz
                .right(&x)
                .minus(&dx.right(&z).scale(&Scalar::q_pow(-2)))
                .scale(&inv(&(&am * mu)));
            // α_+ μ z_-² ω_+ = q y d(z) - q⁻¹ z d(y)
            zm2_wp = dz
                .left(&y)
                .scale(&q)
                .minus(&dy.left(&z).scale(&Scalar::q_pow(-1)))
                .scale(&inv(&(&ap * mu)));
            // α_- μ z_+ x_+ ω_- = q⁻² x d(y) - q² λ z d(z)
            let zpxp = dy
                .left(&x)
                .scale(&Scalar::q_pow(-2))
                .minus(&dz.left(&z).scale(&(Scalar::q_pow(2) * lambda)))
                .scale(&inv(&(&am * mu)));
            // d(z) = α_- z_+ x_+ ω_- + α_+ z_- x_- ω_+
            zmxm_wp = dz.minus(&zpxp.scale(&am)).scale(&inv(&ap));
            zpxp_wm = Some(zpxp);
        } else {
            let f = bz(&cert.f);
            let g = bz(&cert.g.scale(&inv(&q)));
            // z d(x) - d(x) z = (1 - q⁴) α_+ z x_-² ω_+
            let zxm2 = dx
                .left(&z)
                .minus(&dx.right(&z))
                .scale(&inv(&((&one - Scalar::q_pow(4)) * &ap)));
            // z d(x) = q α_- z c z_+² ω_- + α_+ z x_-² ω_+
            let zc_zp2 = dx.left(&z).minus(&zxm2.scale(&ap)).scale(&inv(&(&q * &am)));
            // d(z) x = α_- p z_+² ω_- + q² α_+ z x_-² ω_+
            let p_zp2 = dz
                .right(&x)
                .minus(&zxm2.scale(&(Scalar::q_pow(2) * &ap)))
                .scale(&inv(&am));
            zp2_wm = p_zp2.left(&f).plus(&zc_zp2.left(&g));

            // z d(y) - d(y) z = (q - q⁻³) α_- z x_+² ω_-
            let zxp2 = dy
                .left(&z)
                .minus(&dy.right(&z))
                .scale(&inv(&((&q - Scalar::q_pow(-3)) * &am)));
            // y d(z) = q⁻¹ α_- z x_+² ω_- + q⁻¹ α_+ p z_-² ω_+
            let p_zm2 = dz
                .left(&y)
                .scale(&q)
                .minus(&zxp2.scale(&am))
                .scale(&inv(&ap));
            // z d(y) = q α_- z x_+² ω_- + α_+ z c z_-² ω_+
            let zc_zm2 = dy.left(&z).minus(&zxp2.scale(&(&q * &am))).scale(&inv(&ap));
            zm2_wp = p_zm2.left(&f).plus(&zc_zm2.left(&g));

            // α_+ z z_- x_- ω_+ = (z d(z) - q² d(z) z) / (1 - q⁴)
            let z_mix = dz
                .left(&z)
                .minus(&dz.right(&z).scale(&Scalar::q_pow(2)))
                .scale(&inv(&((&one - Scalar::q_pow(4)) * &ap)));
            // α_+ p z_- x_- ω_+ = y d(x) - q⁻¹ c(q⁻²z) / (1 - q⁻⁴) (z d(z) - q⁻² d(z) z)
            let k = Scalar::q_pow(-1) * inv(&(&one - Scalar::q_pow(-4)));
            let inner = dz.left(&z).minus(&dz.right(&z).scale(&Scalar::q_pow(-2)));
            let p_mix = dx
                .left(&y)
                .minus(&inner.left(&bz(&ctx.c().rescale_q_pow(-2))).scale(&k))
                .scale(&inv(&ap));
            zmxm_wp = z_mix.left(&bz(&cert.f0)).plus(&p_mix.left(&bz(&cert.g0)));
            zpxp_wm = None;
        }
        let comb = match target {
            BarTarget::ZPlusSqOmegaMinus => zp2_wm,
            BarTarget::ZMinusSqOmegaPlus => zm2_wp,
            BarTarget::ZMinusXMinusOmegaPlus => zmxm_wp,
            // d(x) = q α_- c z_+² ω_- + α_+ x_-² ω_+
            BarTarget::XMinusSqOmegaPlus => dx
                .minus(&zp2_wm.left(&c).scale(&(&q * &am)))
                .scale(&inv(&ap)),
            // d(y) = q α_- x_+² ω_- + α_+ c z_-² ω_+
            BarTarget::XPlusSqOmegaMinus => dy
                .minus(&zm2_wp.left(&c).scale(&ap))
                .scale(&inv(&(&q * &am))),
            BarTarget::ZPlusXPlusOmegaMinus => match zpxp_wm {
                Some(w) => w,
                None => dz.minus(&zmxm_wp.scale(&ap)).scale(&inv(&am)),
            },
        };
        Ok((comb.pruned(), linear.is_some()))
    }

    /// Expresses a generator of `Ω̄` as `Σ u_i d(g_i) v_i` with `u_i, v_i` in
    /// `B(p;q)` and `g_i ∈ {x, y, z}`; the result is evaluated before it is
    /// returned.
    pub fn bar_witness(&self, target: BarTarget) -> Result<BarWitness> {
        let (comb, linear_branch) = self.bar_comb(target)?;
        let got = self.eval_bar(&comb.terms);
        if got != target.form(self.ctx()) {
            return Err(Error::WitnessMismatch(format!("{target}: got {got}")));
        }
        Ok(BarWitness {
            target,
            terms: comb.terms,
            linear_branch,
        })
    }
}
