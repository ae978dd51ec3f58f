//! The twisting automorphisms `σ_±, σ_0` and the skew derivations
//! `∂_0, ∂_±` of `A(p;q)`, plus the induced derivations `δ_± = ∂_± ∘ Θ` on
//! `B(p;q)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::gwa::rewrite::{a_word, Gen};
use crate::gwa::{theta, AMonomial, AlgElem, AlgebraCtx, BElem, Monomial};
use crate::scalars::{q_integer, Scalar};

/// One of the three directions `-, 0, +` of the calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Comp {
    Minus,
    Zero,
    Plus,
}

impl Comp {
    pub const ALL: [Comp; 3] = [Comp::Minus, Comp::Zero, Comp::Plus];

    /// `σ` scales degree-`k` elements by `q^{twist·k}`.
    pub fn twist(self) -> i32 {
        match self {
            Comp::Zero => 2,
            Comp::Minus | Comp::Plus => 1,
        }
    }

    /// Degree shift of `∂`: `0` for `∂_0`, `∓2` for `∂_±`.
    pub fn degree_shift(self) -> i64 {
        match self {
            Comp::Minus => 2,
            Comp::Zero => 0,
            Comp::Plus => -2,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Comp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comp::Minus => "-",
            Comp::Zero => "0",
            Comp::Plus => "+",
        })
    }
}

/// `σ^n(a)` for the automorphism of direction `c`.
pub fn sigma_pow(c: Comp, a: &AlgElem, n: i32) -> AlgElem {
    let t = c.twist() * n;
    a.map_coeffs(|m, v| v.mul_q_pow(t * m.degree() as i32))
}

/// `σ_±(a) = q^{|a|}a`, `σ_0(a) = q^{2|a|}a` on homogeneous components.
pub fn sigma(c: Comp, a: &AlgElem) -> AlgElem {
    sigma_pow(c, a, 1)
}

/// The scalars `α_0, α_+, α_-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivParams {
    alpha0: Scalar,
    alpha_plus: Scalar,
    alpha_minus: Scalar,
}

impl DerivParams {
    pub fn new(alpha0: Scalar, alpha_plus: Scalar, alpha_minus: Scalar) -> Result<Self> {
        if alpha0.is_zero() || alpha_plus.is_zero() || alpha_minus.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(DerivParams {
            alpha0,
            alpha_plus,
            alpha_minus,
        })
    }

    pub fn alpha0(&self) -> &Scalar {
        &self.alpha0
    }

    pub fn alpha_plus(&self) -> &Scalar {
        &self.alpha_plus
    }

    pub fn alpha_minus(&self) -> &Scalar {
        &self.alpha_minus
    }

    pub fn alpha(&self, c: Comp) -> &Scalar {
        match c {
            Comp::Minus => &self.alpha_minus,
            Comp::Zero => &self.alpha0,
            Comp::Plus => &self.alpha_plus,
        }
    }

    /// `α_0` real and `α_-^* = q·α_+`, the condition for a ∗-calculus.
    pub fn is_star_compatible(&self) -> bool {
        self.alpha0.conj() == self.alpha0
            && self.alpha_minus.conj() == Scalar::q() * &self.alpha_plus
    }
}

impl Default for DerivParams {
    /// `α_0 = 1`, `α_+ = 1`, `α_- = q`.
    fn default() -> Self {
        DerivParams {
            alpha0: Scalar::one(),
            alpha_plus: Scalar::one(),
            alpha_minus: Scalar::q(),
        }
    }
}

/// The three skew derivations on a fixed algebra.
///
/// Each derivation is extended from its generator values along the
/// canonical word of every basis monomial by
/// `∂(g_1…g_k) = Σ_j g_1…g_{j-1} ∂(g_j) σ(g_{j+1}…g_k)`.
pub struct Derivations {
    ctx: Arc<AlgebraCtx>,
    params: DerivParams,
    images: [[AlgElem; 4]; 3],
    cache: [Mutex<HashMap<AMonomial, AlgElem>>; 3],
}

fn gen_slot(g: Gen) -> usize {
    match g {
        Gen::XPlus => 0,
        Gen::XMinus => 1,
        Gen::ZPlus => 2,
        Gen::ZMinus => 3,
        _ => unreachable!("not a generator of A(p;q)"),
    }
}

impl Derivations {
    pub fn new(ctx: &Arc<AlgebraCtx>, params: DerivParams) -> Self {
        let (xp, xm, zp, zm) = (
            AlgElem::x_plus(ctx),
            AlgElem::x_minus(ctx),
            AlgElem::z_plus(ctx),
            AlgElem::z_minus(ctx),
        );
        let zero = AlgElem::zero(ctx);
        let c = AlgElem::from_zpoly(ctx, ctx.c());
        let a0 = params.alpha0.clone();
        let m = -Scalar::q_pow(-2) * &a0;
        let minus = [
            zero.clone(),
            (&c * &zp).scale(&params.alpha_minus),
            zero.clone(),
            xp.scale(&params.alpha_minus),
        ];
        let zero_dir = [xp.scale(&a0), xm.scale(&m), zp.scale(&a0), zm.scale(&m)];
        let plus = [
            (&c * &zm).scale(&params.alpha_plus),
            zero.clone(),
            xm.scale(&params.alpha_plus),
            zero,
        ];
        Derivations {
            ctx: ctx.clone(),
            params,
            images: [minus, zero_dir, plus],
            cache: Default::default(),
        }
    }

    pub fn with_defaults(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::new(ctx, DerivParams::default())
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        &self.ctx
    }

    pub fn params(&self) -> &DerivParams {
        &self.params
    }

    /// `∂_c(g)` for a generator `g`.
    pub fn on_generator(&self, c: Comp, g: Gen) -> &AlgElem {
        &self.images[c.index()][gen_slot(g)]
    }

    fn on_monomial(&self, c: Comp, m: &AMonomial) -> AlgElem {
        if let Some(hit) = self.cache[c.index()].lock().unwrap().get(m) {
            return hit.clone();
        }
        let word = a_word(m);
        let t = c.twist();
        let mut out = AlgElem::zero(&self.ctx);
        let mut prefix = AMonomial::unit();
        for (j, g) in word.iter().enumerate() {
            let img = self.on_generator(c, *g);
            if !img.is_zero() {
                let suffix = word_monomial(&word[j + 1..]);
                let s = Scalar::q_pow(t * suffix.degree() as i32);
                let term = img
                    .left_mul_monomial(&prefix, &Scalar::one())
                    .mul_monomial(&suffix, &s);
                out = out + term;
            }
            prefix = word_monomial(&word[..=j]);
        }
        self.cache[c.index()]
            .lock()
            .unwrap()
            .insert(*m, out.clone());
        out
    }

    /// `∂_c(a)`.
    pub fn apply(&self, c: Comp, a: &AlgElem) -> AlgElem {
        assert!(
            self.ctx.same_as(a.ctx()),
            "element belongs to a different algebra"
        );
        let mut out = AlgElem::zero(&self.ctx);
        for (m, v) in a.terms() {
            out = out + self.on_monomial(c, m).scale(v);
        }
        out
    }

    /// `δ_± = ∂_± ∘ Θ`, a derivation `B(p;q) → A(p;q)_{∓2}`.
    pub fn delta(&self, c: Comp, b: &BElem) -> AlgElem {
        self.apply(c, &theta(b))
    }
}

// Subwords of a canonical word are canonical.
fn word_monomial(w: &[Gen]) -> AMonomial {
    let mut m = AMonomial::unit();
    for g in w {
        match g {
            Gen::XPlus => m.x += 1,
            Gen::XMinus => m.x -= 1,
            Gen::ZPlus => m.zplus += 1,
            Gen::ZMinus => m.zminus += 1,
            _ => unreachable!(),
        }
    }
    m
}

/// `∂_0(x_+^n z_+^m) = α_0 [m+n] x_+^n z_+^m`.
pub fn d0_closed_form_plus(ctx: &Arc<AlgebraCtx>, params: &DerivParams, n: u32, m: u32) -> AlgElem {
    AlgElem::monomial(
        ctx,
        AMonomial::new(n as i32, m, 0),
        params.alpha0() * q_integer(m + n),
    )
}

/// `∂_0(x_-^n z_-^m) = -α_0 q^{-2(m+n)} [m+n] x_-^n z_-^m`.
///
/// Each of the `m+n` letters contributes `-q^{-2}α_0` times the twist
/// `q^{-2j}` of the letters to its right.
pub fn d0_closed_form_minus(
    ctx: &Arc<AlgebraCtx>,
    params: &DerivParams,
    n: u32,
    m: u32,
) -> AlgElem {
    let k = (m + n) as i32;
    AlgElem::monomial(
        ctx,
        AMonomial::new(-(n as i32), 0, m),
        -(params.alpha0() * q_integer(m + n)).mul_q_pow(-2 * k),
    )
}
