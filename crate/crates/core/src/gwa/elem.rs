use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::ctx::AlgebraCtx;
use super::monomial::{add_term, AMonomial, BMonomial, Monomial, Shape};
use crate::error::{Error, Result};
use crate::fmt_util::write_sum;
use crate::scalars::laurent::SmallLaurent;
use crate::scalars::{Scalar, ZPoly};

/// A normal-form linear combination of basis monomials.
#[derive(Clone)]
pub struct Element<M: Monomial> {
    ctx: Arc<AlgebraCtx>,
    terms: BTreeMap<M, Scalar>,
}

/// Element of `A(p;q)`.
pub type AlgElem = Element<AMonomial>;
/// Element of `B(p;q)`.
pub type BElem = Element<BMonomial>;

impl<M: Monomial> Element<M> {
    pub fn zero(ctx: &Arc<AlgebraCtx>) -> Self {
        Element {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, M::unit(), Scalar::one())
    }

    pub fn scalar(ctx: &Arc<AlgebraCtx>, c: Scalar) -> Self {
        Self::monomial(ctx, M::unit(), c)
    }

    pub fn monomial(ctx: &Arc<AlgebraCtx>, m: M, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Sums `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms(ctx: &Arc<AlgebraCtx>, terms: impl IntoIterator<Item = (M, Scalar)>) -> Self {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            add_term(&mut acc, m, c);
        }
        Element {
            ctx: ctx.clone(),
            terms: acc,
        }
    }

    pub fn ctx(&self) -> &Arc<AlgebraCtx> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<M, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<M, Scalar> {
        self.terms
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Element {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&M, &Scalar) -> Scalar) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = f(m, c);
                (!v.is_zero()).then(|| (m.clone(), v))
            })
            .collect();
        Element {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Element {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), -c);
        }
        Ok(Element {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        if let Some(out) = self.mul_small(other) {
            return Ok(out);
        }
        Ok(self.mul_general(other))
    }

    fn mul_general(&self, other: &Self) -> Self {
        let mut acc = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                M::mul_into(&self.ctx, ma, mb, ca * cb, &mut acc);
            }
        }
        Element {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    // Product with machine-integer Laurent coefficients; `None` when some
    // coefficient is not an integer Laurent polynomial or on overflow.
    fn mul_small(&self, other: &Self) -> Option<Self> {
        if self.terms.len() * other.terms.len() < 64 {
            return None;
        }
        fn lift<M: Monomial>(t: &BTreeMap<M, Scalar>) -> Option<Vec<(&M, SmallLaurent)>> {
            t.iter()
                .map(|(m, c)| Some((m, SmallLaurent::from_scalar(c)?)))
                .collect()
        }
        let (la, lb) = (lift(&self.terms)?, lift(&other.terms)?);
        let mut acc: HashMap<M, SmallLaurent> = HashMap::new();
        for (ma, ca) in &la {
            for (mb, cb) in &lb {
                match M::shape(&self.ctx, ma, mb) {
                    Shape::Single(m, shift) => {
                        acc.entry(m).or_default().add_product(ca, cb, shift)?
                    }
                    Shape::Block(m, shift, block) => {
                        let small = block.small.as_ref()?;
                        let mut ab = SmallLaurent::default();
                        ab.add_product(ca, cb, shift)?;
                        for (k, f) in small.iter().enumerate() {
                            acc.entry(m.times_z(k as u32))
                                .or_default()
                                .add_product(&ab, f, 0)?;
                        }
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter_map(|(m, l)| {
                let c = l.to_scalar();
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        Some(Element {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// `self · m` for a single basis monomial.
    pub fn mul_monomial(&self, m: &M, c: &Scalar) -> Self {
        let mut acc = BTreeMap::new();
        for (ma, ca) in &self.terms {
            M::mul_into(&self.ctx, ma, m, ca * c, &mut acc);
        }
        Element {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    /// `m · self` for a single basis monomial.
    pub fn left_mul_monomial(&self, m: &M, c: &Scalar) -> Self {
        let mut acc = BTreeMap::new();
        for (mb, cb) in &self.terms {
            M::mul_into(&self.ctx, m, mb, c * cb, &mut acc);
        }
        Element {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ctx);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Splits by degree; the components sum back to `self`.
    pub fn grade_decompose(&self) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(&self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The common degree of all terms; `None` if mixed. Zero has every degree
    /// and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|e| e == d).then_some(d),
        }
    }

    /// Homogeneous of degree `d` (zero counts for every `d`).
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn max_word_len(&self) -> u32 {
        self.terms.keys().map(Monomial::word_len).max().unwrap_or(0)
    }

    /// Coefficient-wise conjugation (the identity on `ℚ(q)`).
    pub fn conj_coeffs(&self) -> Self {
        self.map_coeffs(|_, c| c.conj())
    }
}

impl<M: Monomial> PartialEq for Element<M> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.terms == other.terms
    }
}

impl<M: Monomial> Eq for Element<M> {}

impl<M: Monomial> fmt::Display for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Scalar, String)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let s = if *m == M::unit() {
                    String::new()
                } else {
                    m.to_string()
                };
                (c.clone(), s)
            })
            .collect();
        write_sum(f, &terms)
    }
}

impl<M: Monomial> fmt::Debug for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! elem_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<M: Monomial> $tr<&Element<M>> for &Element<M> {
            type Output = Element<M>;
            fn $method(self, rhs: &Element<M>) -> Element<M> {
                self.$inner(rhs)
                    .expect("elements belong to different algebras")
            }
        }
        impl<M: Monomial> $tr<Element<M>> for Element<M> {
            type Output = Element<M>;
            fn $method(self, rhs: Element<M>) -> Element<M> {
                (&self).$method(&rhs)
            }
        }
        impl<M: Monomial> $tr<&Element<M>> for Element<M> {
            type Output = Element<M>;
            fn $method(self, rhs: &Element<M>) -> Element<M> {
                (&self).$method(rhs)
            }
        }
        impl<M: Monomial> $tr<Element<M>> for &Element<M> {
            type Output = Element<M>;
            fn $method(self, rhs: Element<M>) -> Element<M> {
                self.$method(&rhs)
            }
        }
    };
}

elem_binop!(Add, add, try_add);
elem_binop!(Sub, sub, try_sub);
elem_binop!(Mul, mul, try_mul);

impl<M: Monomial> Neg for &Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        self.map_coeffs(|_, c| -c)
    }
}

impl<M: Monomial> Neg for Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        -&self
    }
}

impl<M: Monomial> Mul<&Scalar> for &Element<M> {
    type Output = Element<M>;
    fn mul(self, rhs: &Scalar) -> Element<M> {
        self.scale(rhs)
    }
}

impl<M: Monomial> Mul<&Element<M>> for &Scalar {
    type Output = Element<M>;
    fn mul(self, rhs: &Element<M>) -> Element<M> {
        rhs.scale(self)
    }
}

// (x^e z^m)^* = z^m y^e and symmetric; in A, (x_±^n z_+^a z_-^b)^* = z_+^b z_-^a x_∓^n.

impl AlgElem {
    pub fn x_plus(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, AMonomial::new(1, 0, 0), Scalar::one())
    }

    pub fn x_minus(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, AMonomial::new(-1, 0, 0), Scalar::one())
    }

    pub fn z_plus(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, AMonomial::new(0, 1, 0), Scalar::one())
    }

    pub fn z_minus(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, AMonomial::new(0, 0, 1), Scalar::one())
    }

    /// `f(z)` with `z = z_+z_-`.
    pub fn from_zpoly(ctx: &Arc<AlgebraCtx>, f: &ZPoly) -> Self {
        Self::from_terms(
            ctx,
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (AMonomial::z_pow(k as u32), c.clone())),
        )
    }

    /// The element as a polynomial in `z`, if it is one.
    pub fn to_zpoly(&self) -> Option<ZPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            let k = m.as_z_power()? as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Scalar::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(ZPoly::from_coeffs(coeffs))
    }

    /// The antilinear antimultiplicative involution with `x_-^* = x_+`,
    /// `z_-^* = z_+`.
    pub fn star(&self) -> Self {
        Self::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, c)| {
                let x = -m.x;
                // z_+^b z_-^a x^x = q^{x(a+b)} x^x z_+^b z_-^a
                let k = x * (m.zplus + m.zminus) as i32;
                (AMonomial::new(x, m.zminus, m.zplus), c.conj().mul_q_pow(k))
            }),
        )
    }
}

impl BElem {
    pub fn x(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, BMonomial::new(-1, 0), Scalar::one())
    }

    pub fn y(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, BMonomial::new(1, 0), Scalar::one())
    }

    pub fn z(ctx: &Arc<AlgebraCtx>) -> Self {
        Self::monomial(ctx, BMonomial::new(0, 1), Scalar::one())
    }

    pub fn from_zpoly(ctx: &Arc<AlgebraCtx>, f: &ZPoly) -> Self {
        Self::from_terms(
            ctx,
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (BMonomial::new(0, k as u32), c.clone())),
        )
    }

    /// The involution with `x^* = y`, `z^* = z`.
    pub fn star(&self) -> Self {
        Self::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, c)| {
                let xy = -m.xy;
                // z^m t^{xy} = q^{2·xy·m} t^{xy} z^m
                (
                    BMonomial::new(xy, m.z),
                    c.conj().mul_q_pow(2 * xy * m.z as i32),
                )
            }),
        )
    }
}

fn tri(e: i32) -> i32 {
    e * (e + 1) / 2
}

/// The embedding `B(p;q) → A(p;q)` with `x ↦ x_-z_+`, `y ↦ z_-x_+`,
/// `z ↦ z_-z_+`, onto the degree-zero part.
pub fn theta(b: &BElem) -> AlgElem {
    AlgElem::from_terms(
        b.ctx(),
        b.terms().iter().map(|(m, c)| {
            let e = m.xyexp();
            let ei = e as i32;
            if m.xy > 0 {
                // (z_-x_+)^e = q^{e(e+1)/2} x_+^e z_-^e
                (AMonomial::new(ei, m.z, m.z + e), c.mul_q_pow(tri(ei)))
            } else {
                // (x_-z_+)^e = q^{-e(e-1)/2} x_-^e z_+^e
                (AMonomial::new(-ei, m.z + e, m.z), c.mul_q_pow(-tri(ei - 1)))
            }
        }),
    )
}

/// Inverse of [`theta`] on the degree-zero part of `A(p;q)`.
pub fn theta_inverse(a: &AlgElem) -> Result<BElem> {
    if !a.is_homogeneous_of(0) {
        return Err(Error::NotHomogeneous { expected: 0 });
    }
    Ok(BElem::from_terms(
        a.ctx(),
        a.terms().iter().map(|(m, c)| {
            let e = m.xexp() as i32;
            if m.x > 0 {
                (BMonomial::new(e, m.zplus), c.mul_q_pow(-tri(e)))
            } else {
                (BMonomial::new(-e, m.zminus), c.mul_q_pow(tri(e - 1)))
            }
        }),
    ))
}
