use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::scalars::laurent::SmallLaurent;
use crate::scalars::{q2_separability, Scalar, SeparabilityCertificate, ZPoly};

/// `t^a s^b` (or `s^a t^b`) collapsed to `x^x · poly(z)`, with `x` the signed
/// exponent of the surviving x-block and `poly` standing to its right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XProduct {
    pub x: i32,
    pub poly: ZPoly,
    pub(crate) small: Option<Vec<SmallLaurent>>,
}

impl XProduct {
    fn new(x: i32, poly: ZPoly) -> Self {
        let small = poly
            .coeffs()
            .iter()
            .map(SmallLaurent::from_scalar)
            .collect();
        XProduct { x, poly, small }
    }
}

/// Closed-form products of opposite x-powers in a rank-one generalized Weyl
/// algebra with `t s = P(z)`, `s t = P(q²z)`, `t f(z) = f(q⁻²z) t`.
///
/// `t` is the generator of positive signed exponent (`x_+` in `A`, `y` in
/// `B`) and `s` the negative one (`x_-` in `A`, `x` in `B`).
pub struct XBlock {
    pp: ZPoly,
    cache: RwLock<HashMap<(i32, i32), Arc<XProduct>>>,
}

impl XBlock {
    fn new(pp: ZPoly) -> Self {
        XBlock {
            pp,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// The polynomial `P` with `t s = P(z)`.
    pub fn relation_poly(&self) -> &ZPoly {
        &self.pp
    }

    /// Normal form of `x^a · x^b` for signed exponents of opposite sign.
    pub fn product(&self, a: i32, b: i32) -> Arc<XProduct> {
        debug_assert!(a != 0 && b != 0 && (a > 0) != (b > 0));
        if let Some(hit) = self.cache.read().unwrap().get(&(a, b)) {
            return hit.clone();
        }
        let out = Arc::new(self.compute(a, b));
        self.cache.write().unwrap().insert((a, b), out.clone());
        out
    }

    fn shifted_product(&self, shifts: impl Iterator<Item = i32>) -> ZPoly {
        shifts.fold(ZPoly::one(), |acc, k| &acc * &self.pp.rescale_q_pow(k))
    }

    fn compute(&self, a: i32, b: i32) -> XProduct {
        let (na, nb) = (a.abs(), b.abs());
        if a > 0 {
            // t^a s^b
            if na >= nb {
                XProduct::new(na - nb, self.shifted_product((0..nb).map(|j| -2 * j)))
            } else {
                let r = nb - na;
                XProduct::new(-r, self.shifted_product((0..na).map(|j| -2 * j - 2 * r)))
            }
        } else if na >= nb {
            // s^a t^b
            XProduct::new(-(na - nb), self.shifted_product((1..=nb).map(|j| 2 * j)))
        } else {
            let r = nb - na;
            XProduct::new(r, self.shifted_product((1..=na).map(|j| 2 * j + 2 * r)))
        }
    }
}

/// The defining data `(p; q)` shared by `A(p;q)` and `B(p;q)`.
///
/// Immutable after construction apart from the internal product caches.
pub struct AlgebraCtx {
    p: ZPoly,
    cert: Option<SeparabilityCertificate>,
    c: ZPoly,
    a_block: XBlock,
    b_block: XBlock,
}

impl AlgebraCtx {
    pub fn new(p: ZPoly) -> Result<Arc<Self>> {
        let cert = q2_separability(&p)?;
        let c = p.c_poly();
        let zp = p.shift(1);
        Ok(Arc::new(AlgebraCtx {
            a_block: XBlock::new(p.clone()),
            b_block: XBlock::new(zp),
            p,
            cert,
            c,
        }))
    }

    /// Context for `p` that must be q²-separable.
    pub fn regular(p: ZPoly) -> Result<Arc<Self>> {
        let ctx = Self::new(p)?;
        ctx.require_regular()?;
        Ok(ctx)
    }

    pub fn p(&self) -> &ZPoly {
        &self.p
    }

    /// `c(z) = q·p_{q²}(z)`.
    pub fn c(&self) -> &ZPoly {
        &self.c
    }

    pub fn is_regular(&self) -> bool {
        self.cert.is_some()
    }

    pub fn certificate(&self) -> Option<&SeparabilityCertificate> {
        self.cert.as_ref()
    }

    pub fn require_regular(&self) -> Result<&SeparabilityCertificate> {
        self.cert.as_ref().ok_or(Error::NotRegular)
    }

    pub fn a_block(&self) -> &XBlock {
        &self.a_block
    }

    pub fn b_block(&self) -> &XBlock {
        &self.b_block
    }

    /// Two contexts define the same algebra.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.p == other.p
    }

    /// `p(0)`.
    pub fn p0(&self) -> Scalar {
        self.p.constant_term()
    }
}

impl fmt::Debug for AlgebraCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraCtx")
            .field("p", &self.p)
            .field("regular", &self.is_regular())
            .finish()
    }
}
