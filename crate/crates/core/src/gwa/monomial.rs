use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use std::sync::Arc;

use super::ctx::{AlgebraCtx, XProduct};
use crate::scalars::Scalar;

/// Which x-type generator a monomial starts with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XSign {
    None,
    Plus,
    Minus,
}

fn xsign_of(x: i32) -> XSign {
    match x.cmp(&0) {
        Ordering::Equal => XSign::None,
        Ordering::Greater => XSign::Plus,
        Ordering::Less => XSign::Minus,
    }
}

/// Behaviour shared by the basis monomials of `A(p;q)` and `B(p;q)`.
pub trait Monomial: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn unit() -> Self;
    /// Degree in the `ℤ`-grading of `A(p;q)` (always 0 in `B(p;q)`).
    fn degree(&self) -> i64;
    /// Length of the canonical word spelling this monomial.
    fn word_len(&self) -> u32;
    /// `self · z^k`.
    fn times_z(&self, k: u32) -> Self;
    /// How the product `a·b` of two basis monomials expands.
    fn shape(ctx: &AlgebraCtx, a: &Self, b: &Self) -> Shape<Self>;

    /// Adds `coeff·a·b` in normal form to `acc`.
    fn mul_into(
        ctx: &AlgebraCtx,
        a: &Self,
        b: &Self,
        coeff: Scalar,
        acc: &mut BTreeMap<Self, Scalar>,
    ) {
        match Self::shape(ctx, a, b) {
            Shape::Single(m, shift) => add_term(acc, m, coeff.mul_q_pow(shift)),
            Shape::Block(m, shift, block) => {
                let coeff = coeff.mul_q_pow(shift);
                for (k, f) in block.poly.coeffs().iter().enumerate() {
                    if !f.is_zero() {
                        add_term(acc, m.times_z(k as u32), &coeff * f);
                    }
                }
            }
        }
    }
}

/// The product of two basis monomials: `q^shift·m`, or
/// `q^shift·m·poly(z)` for the collapsed x-block `poly`.
pub enum Shape<M> {
    Single(M, i32),
    Block(M, i32, Arc<XProduct>),
}

pub(crate) fn add_term<M: Ord>(acc: &mut BTreeMap<M, Scalar>, m: M, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Basis monomial `x_±^n · z_+^a · z_-^b` of `A(p;q)`.
///
/// `x` is the signed x-exponent: positive for powers of `x_+`, negative for
/// powers of `x_-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AMonomial {
    pub x: i32,
    pub zplus: u32,
    pub zminus: u32,
}

impl AMonomial {
    pub const fn new(x: i32, zplus: u32, zminus: u32) -> Self {
        AMonomial { x, zplus, zminus }
    }

    pub fn xsign(&self) -> XSign {
        xsign_of(self.x)
    }

    pub fn xexp(&self) -> u32 {
        self.x.unsigned_abs()
    }

    /// `z^k = z_+^k z_-^k`.
    pub const fn z_pow(k: u32) -> Self {
        AMonomial {
            x: 0,
            zplus: k,
            zminus: k,
        }
    }

    /// The monomial is a power of `z = z_+z_-`; returns the exponent.
    pub fn as_z_power(&self) -> Option<u32> {
        (self.x == 0 && self.zplus == self.zminus).then_some(self.zplus)
    }

    fn key(&self) -> (XSign, u32, u32, u32) {
        (self.xsign(), self.xexp(), self.zplus, self.zminus)
    }
}

impl Ord for AMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for AMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for AMonomial {
    fn unit() -> Self {
        AMonomial::new(0, 0, 0)
    }

    fn degree(&self) -> i64 {
        self.x as i64 + self.zplus as i64 - self.zminus as i64
    }

    fn word_len(&self) -> u32 {
        self.xexp() + self.zplus + self.zminus
    }

    fn times_z(&self, k: u32) -> Self {
        AMonomial::new(self.x, self.zplus + k, self.zminus + k)
    }

    fn shape(ctx: &AlgebraCtx, a: &Self, b: &Self) -> Shape<Self> {
        // z_± x_+ = q x_+ z_±, z_± x_- = q^{-1} x_- z_±
        let shift = b.x * (a.zplus + a.zminus) as i32;
        let zp = a.zplus + b.zplus;
        let zm = a.zminus + b.zminus;
        if a.x == 0 || b.x == 0 || (a.x > 0) == (b.x > 0) {
            return Shape::Single(AMonomial::new(a.x + b.x, zp, zm), shift);
        }
        let prod = ctx.a_block().product(a.x, b.x);
        Shape::Block(AMonomial::new(prod.x, zp, zm), shift, prod)
    }
}

impl fmt::Display for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let push = |parts: &mut Vec<String>, g: &str, e: u32| match e {
            0 => {}
            1 => parts.push(g.to_string()),
            _ => parts.push(format!("{g}^{e}")),
        };
        push(
            &mut parts,
            if self.x > 0 { "x+" } else { "x-" },
            self.xexp(),
        );
        push(&mut parts, "z+", self.zplus);
        push(&mut parts, "z-", self.zminus);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Basis monomial `x^e z^m` or `y^e z^m` of `B(p;q)`.
///
/// `xy` is the signed exponent: positive for powers of `y`, negative for
/// powers of `x` (under `Θ`, `y` carries `x_+` and `x` carries `x_-`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BMonomial {
    pub xy: i32,
    pub z: u32,
}

/// The x/y part of a [`BMonomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XYSign {
    None,
    X,
    Y,
}

impl BMonomial {
    pub const fn new(xy: i32, z: u32) -> Self {
        BMonomial { xy, z }
    }

    pub fn xysign(&self) -> XYSign {
        match self.xy.cmp(&0) {
            Ordering::Equal => XYSign::None,
            Ordering::Less => XYSign::X,
            Ordering::Greater => XYSign::Y,
        }
    }

    pub fn xyexp(&self) -> u32 {
        self.xy.unsigned_abs()
    }

    fn key(&self) -> (XYSign, u32, u32) {
        (self.xysign(), self.xyexp(), self.z)
    }
}

impl Ord for BMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for BMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for BMonomial {
    fn unit() -> Self {
        BMonomial::new(0, 0)
    }

    fn degree(&self) -> i64 {
        0
    }

    fn word_len(&self) -> u32 {
        self.xyexp() + self.z
    }

    fn times_z(&self, k: u32) -> Self {
        BMonomial::new(self.xy, self.z + k)
    }

    fn shape(ctx: &AlgebraCtx, a: &Self, b: &Self) -> Shape<Self> {
        // z y = q² y z, z x = q^{-2} x z
        let shift = 2 * b.xy * a.z as i32;
        let z = a.z + b.z;
        if a.xy == 0 || b.xy == 0 || (a.xy > 0) == (b.xy > 0) {
            return Shape::Single(BMonomial::new(a.xy + b.xy, z), shift);
        }
        let prod = ctx.b_block().product(a.xy, b.xy);
        Shape::Block(BMonomial::new(prod.x, z), shift, prod)
    }
}

impl fmt::Display for BMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let g = if self.xy > 0 { "y" } else { "x" };
        match self.xyexp() {
            0 => {}
            1 => parts.push(g.to_string()),
            e => parts.push(format!("{g}^{e}")),
        }
        match self.z {
            0 => {}
            1 => parts.push("z".to_string()),
            e => parts.push(format!("z^{e}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All basis monomials of `A(p;q)` whose canonical word has length at most
/// `max_len`, in canonical order.
pub fn a_basis(max_len: u32) -> Vec<AMonomial> {
    let mut out = Vec::new();
    for n in 0..=max_len {
        for zp in 0..=(max_len - n) {
            for zm in 0..=(max_len - n - zp) {
                out.push(AMonomial::new(n as i32, zp, zm));
                if n > 0 {
                    out.push(AMonomial::new(-(n as i32), zp, zm));
                }
            }
        }
    }
    out.sort();
    out
}

/// Basis monomials of `A(p;q)` of the given degree and word length at most
/// `max_len`.
pub fn a_basis_of_degree(degree: i64, max_len: u32) -> Vec<AMonomial> {
    a_basis(max_len)
        .into_iter()
        .filter(|m| m.degree() == degree)
        .collect()
}

/// All basis monomials of `B(p;q)` of word length at most `max_len`.
pub fn b_basis(max_len: u32) -> Vec<BMonomial> {
    let mut out = Vec::new();
    for e in 0..=max_len {
        for z in 0..=(max_len - e) {
            out.push(BMonomial::new(e as i32, z));
            if e > 0 {
                out.push(BMonomial::new(-(e as i32), z));
            }
        }
    }
    out.sort();
    out
}
