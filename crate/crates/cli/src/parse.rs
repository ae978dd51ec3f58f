//! Recursive-descent parser for scalars, polynomials in `z`, algebra
//! elements, spinors, one-forms and covectors.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? integer)?
//! atom    := integer | name | '(' sum ')'
//! ```
//!
//! In `A(p;q)` the generators are `x+ x- z+ z-`; a sign directly after `x`
//! or `z` belongs to the name, so `x+ + 1` is `x_+ + 1`. In `B(p;q)` they are
//! `x y z`. Spinors use `s+ s-`, one-forms `w- w0 w+`, covectors
//! `xi- xi0 xi+`, always as the last factor of a product.

use std::fmt;
use std::sync::Arc;

use gwa_core::calculus::OmegaElem;
use gwa_core::derivations::Comp;
use gwa_core::gwa::{Element, Gen, Monomial};
use gwa_core::integral::CoVector;
use gwa_core::spin::Spinor;
use gwa_core::{AlgElem, AlgebraCtx, BElem, Scalar, ZPoly};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

fn err<T>(column: usize, message: impl Into<String>) -> PResult<T> {
    Err(ParseError {
        column,
        message: message.into(),
    })
}

/// Which algebra an expression lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    A,
    B,
    Spinor,
    Omega,
    Covector,
}

impl Algebra {
    fn uses_a_generators(self) -> bool {
        !matches!(self, Algebra::B)
    }
}

/// A parsed expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    A(AlgElem),
    B(BElem),
    Spinor(Spinor),
    Omega(OmegaElem),
    Covector(CoVector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Name(s) => write!(f, "{s}"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

/// Name suffixes that belong to the name rather than being operators.
fn suffixes(name: &str, mode: Option<Algebra>) -> &'static [char] {
    let Some(alg) = mode else { return &[] };
    match name {
        "x" | "z" if alg.uses_a_generators() => &['+', '-'],
        "s" if alg == Algebra::Spinor => &['+', '-'],
        "w" if alg == Algebra::Omega => &['+', '-', '0'],
        "xi" if alg == Algebra::Covector => &['+', '-', '0'],
        _ => &[],
    }
}

fn lex(text: &str, mode: Option<Algebra>) -> PResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("decimal digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let mut name: String = chars[start..i].iter().collect();
            if i < chars.len() && suffixes(&name, mode).contains(&chars[i]) {
                name.push(chars[i]);
                i += 1;
            }
            out.push((Tok::Name(name), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return err(col, format!("unexpected character '{c}'")),
        };
        out.push((t, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

/// Values an expression can evaluate to, with the operations the grammar
/// needs.
trait Domain {
    type V: Clone;
    fn scalar(&self, s: Scalar) -> Self::V;
    fn name(&self, name: &str, col: usize) -> PResult<Self::V>;
    fn add(&self, a: Self::V, b: Self::V, col: usize) -> PResult<Self::V>;
    fn mul(&self, a: Self::V, b: Self::V, col: usize) -> PResult<Self::V>;
    fn as_scalar(&self, v: &Self::V) -> Option<Scalar>;

    fn neg(&self, a: Self::V, col: usize) -> PResult<Self::V> {
        self.mul(self.scalar(-Scalar::one()), a, col)
    }
}

struct Parser<'d, D: Domain> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    dom: &'d D,
}

impl<D: Domain> Parser<'_, D> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn parse_all(&mut self) -> PResult<D::V> {
        let v = self.sum()?;
        match self.peek() {
            Tok::End => Ok(v),
            t => err(self.col(), format!("unexpected '{t}'")),
        }
    }

    fn sum(&mut self) -> PResult<D::V> {
        let mut acc = self.product()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.product()?;
                    acc = self.dom.add(acc, rhs, col)?;
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.product()?;
                    let rhs = self.dom.neg(rhs, col)?;
                    acc = self.dom.add(acc, rhs, col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> PResult<D::V> {
        let mut acc = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.dom.mul(acc, rhs, col)?;
                }
                Tok::Slash => {
                    self.bump();
                    let rcol = self.col();
                    let rhs = self.unary()?;
                    let Some(s) = self.dom.as_scalar(&rhs) else {
                        return err(rcol, "can only divide by a scalar");
                    };
                    let Ok(inv) = s.recip() else {
                        return err(rcol, "division by zero");
                    };
                    acc = self.dom.mul(acc, self.dom.scalar(inv), col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<D::V> {
        if *self.peek() == Tok::Minus {
            let col = self.col();
            self.bump();
            let v = self.unary()?;
            return self.dom.neg(v, col);
        }
        self.power()
    }

    fn power(&mut self) -> PResult<D::V> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let col = self.col();
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let ecol = self.col();
        let n = match self.bump().0 {
            Tok::Num(n) => u32::try_from(n).or_else(|_| err(ecol, "exponent too large"))?,
            t => return err(ecol, format!("expected an exponent, found '{t}'")),
        };
        if negative {
            let Some(s) = self.dom.as_scalar(&base) else {
                return err(ecol, "negative exponents are only allowed on scalars");
            };
            let Ok(p) = s.pow(-(n as i32)) else {
                return err(col, "division by zero");
            };
            return Ok(self.dom.scalar(p));
        }
        let mut acc = self.dom.scalar(Scalar::one());
        for _ in 0..n {
            acc = self.dom.mul(acc, base.clone(), col)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<D::V> {
        let (t, col) = self.bump();
        match t {
            Tok::Num(n) => Ok(self.dom.scalar(Scalar::from_bigint(n))),
            Tok::Name(name) if name == "q" => Ok(self.dom.scalar(Scalar::q())),
            Tok::Name(name) => self.dom.name(&name, col),
            Tok::LParen => {
                let v = self.sum()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(v),
                    (t, c) => err(c, format!("expected ')', found '{t}'")),
                }
            }
            t => err(col, format!("expected a number, name or '(', found '{t}'")),
        }
    }
}

fn run<D: Domain>(dom: &D, text: &str, mode: Option<Algebra>) -> PResult<D::V> {
    let toks = lex(text, mode)?;
    Parser { toks, pos: 0, dom }.parse_all()
}

struct ScalarDom;

impl Domain for ScalarDom {
    type V = Scalar;
    fn scalar(&self, s: Scalar) -> Scalar {
        s
    }
    fn name(&self, name: &str, col: usize) -> PResult<Scalar> {
        err(
            col,
            format!("unknown name '{name}' in a scalar (only q is allowed)"),
        )
    }
    fn add(&self, a: Scalar, b: Scalar, _: usize) -> PResult<Scalar> {
        Ok(a + b)
    }
    fn mul(&self, a: Scalar, b: Scalar, _: usize) -> PResult<Scalar> {
        Ok(a * b)
    }
    fn as_scalar(&self, v: &Scalar) -> Option<Scalar> {
        Some(v.clone())
    }
}

struct PolyDom;

impl Domain for PolyDom {
    type V = ZPoly;
    fn scalar(&self, s: Scalar) -> ZPoly {
        ZPoly::constant(s)
    }
    fn name(&self, name: &str, col: usize) -> PResult<ZPoly> {
        match name {
            "z" => Ok(ZPoly::z()),
            _ => err(
                col,
                format!("unknown name '{name}' in a polynomial (use z and q)"),
            ),
        }
    }
    fn add(&self, a: ZPoly, b: ZPoly, _: usize) -> PResult<ZPoly> {
        Ok(&a + &b)
    }
    fn mul(&self, a: ZPoly, b: ZPoly, _: usize) -> PResult<ZPoly> {
        Ok(&a * &b)
    }
    fn as_scalar(&self, v: &ZPoly) -> Option<Scalar> {
        (v.degree().unwrap_or(0) == 0).then(|| v.constant_term())
    }
}

fn elem_scalar<M: Monomial>(v: &Element<M>) -> Option<Scalar> {
    match v.terms().iter().next() {
        None => Some(Scalar::zero()),
        Some((m, c)) if v.len() == 1 && *m == M::unit() => Some(c.clone()),
        _ => None,
    }
}

struct ElemDom<'c> {
    ctx: &'c Arc<AlgebraCtx>,
    b: bool,
}

fn a_gen(name: &str) -> Option<Gen> {
    Some(match name {
        "x+" => Gen::XPlus,
        "x-" => Gen::XMinus,
        "z+" => Gen::ZPlus,
        "z-" => Gen::ZMinus,
        _ => return None,
    })
}

fn b_gen(name: &str) -> Option<Gen> {
    Some(match name {
        "x" => Gen::X,
        "y" => Gen::Y,
        "z" => Gen::Z,
        _ => return None,
    })
}

impl Domain for ElemDom<'_> {
    type V = Either;
    fn scalar(&self, s: Scalar) -> Either {
        if self.b {
            Either::B(BElem::scalar(self.ctx, s))
        } else {
            Either::A(AlgElem::scalar(self.ctx, s))
        }
    }
    fn name(&self, name: &str, col: usize) -> PResult<Either> {
        if self.b {
            match b_gen(name) {
                Some(g) => Ok(Either::B(g.to_b(self.ctx).unwrap())),
                None => err(
                    col,
                    format!("unknown generator '{name}' for algebra B (use x, y, z)"),
                ),
            }
        } else {
            match a_gen(name) {
                Some(g) => Ok(Either::A(g.to_a(self.ctx).unwrap())),
                None => err(
                    col,
                    format!("unknown generator '{name}' for algebra A (use x+, x-, z+, z-)"),
                ),
            }
        }
    }
    fn add(&self, a: Either, b: Either, _: usize) -> PResult<Either> {
        Ok(match (a, b) {
            (Either::A(a), Either::A(b)) => Either::A(a + b),
            (Either::B(a), Either::B(b)) => Either::B(a + b),
            _ => unreachable!("one algebra per parse"),
        })
    }
    fn mul(&self, a: Either, b: Either, _: usize) -> PResult<Either> {
        Ok(match (a, b) {
            (Either::A(a), Either::A(b)) => Either::A(a * b),
            (Either::B(a), Either::B(b)) => Either::B(a * b),
            _ => unreachable!("one algebra per parse"),
        })
    }
    fn as_scalar(&self, v: &Either) -> Option<Scalar> {
        match v {
            Either::A(a) => elem_scalar(a),
            Either::B(b) => elem_scalar(b),
        }
    }
}

#[derive(Clone)]
enum Either {
    A(AlgElem),
    B(BElem),
}

/// An element of `A(p;q)` or of a free left module over it with a named
/// basis.
#[derive(Clone)]
enum ModVal {
    Alg(AlgElem),
    Mod(Vec<AlgElem>),
}

struct ModDom<'c> {
    ctx: &'c Arc<AlgebraCtx>,
    kind: Algebra,
    basis: &'static [&'static str],
}

impl ModDom<'_> {
    fn zero_mod(&self) -> Vec<AlgElem> {
        vec![AlgElem::zero(self.ctx); self.basis.len()]
    }

    fn promote(&self, v: ModVal, col: usize) -> PResult<Vec<AlgElem>> {
        match v {
            ModVal::Mod(m) => Ok(m),
            ModVal::Alg(a) if a.is_zero() => Ok(self.zero_mod()),
            ModVal::Alg(a) => err(
                col,
                format!("'{a}' needs a basis factor ({})", self.basis.join(", ")),
            ),
        }
    }
}

impl Domain for ModDom<'_> {
    type V = ModVal;
    fn scalar(&self, s: Scalar) -> ModVal {
        ModVal::Alg(AlgElem::scalar(self.ctx, s))
    }
    fn name(&self, name: &str, col: usize) -> PResult<ModVal> {
        if let Some(i) = self.basis.iter().position(|b| *b == name) {
            let mut m = self.zero_mod();
            m[i] = AlgElem::one(self.ctx);
            return Ok(ModVal::Mod(m));
        }
        match a_gen(name) {
            Some(g) => Ok(ModVal::Alg(g.to_a(self.ctx).unwrap())),
            None => err(
                col,
                format!(
                    "unknown name '{name}' (use x+, x-, z+, z- and the basis {})",
                    self.basis.join(", ")
                ),
            ),
        }
    }
    fn add(&self, a: ModVal, b: ModVal, col: usize) -> PResult<ModVal> {
        Ok(match (a, b) {
            (ModVal::Alg(a), ModVal::Alg(b)) => ModVal::Alg(a + b),
            (a, b) => {
                let (a, b) = (self.promote(a, col)?, self.promote(b, col)?);
                ModVal::Mod(a.into_iter().zip(b).map(|(x, y)| x + y).collect())
            }
        })
    }
    fn mul(&self, a: ModVal, b: ModVal, col: usize) -> PResult<ModVal> {
        match (a, b) {
            (ModVal::Alg(a), ModVal::Alg(b)) => Ok(ModVal::Alg(a * b)),
            (ModVal::Alg(a), ModVal::Mod(m)) => Ok(ModVal::Mod(m.iter().map(|x| &a * x).collect())),
            (ModVal::Mod(m), ModVal::Alg(b)) if self.kind == Algebra::Omega => {
                let w =
                    OmegaElem::from_comps(m[0].clone(), m[1].clone(), m[2].clone()).right_act(&b);
                Ok(ModVal::Mod(
                    [Comp::Minus, Comp::Zero, Comp::Plus]
                        .map(|c| w.comp(c).clone())
                        .to_vec(),
                ))
            }
            (ModVal::Mod(m), ModVal::Alg(b)) => match elem_scalar(&b) {
                Some(s) => Ok(ModVal::Mod(m.iter().map(|x| x.scale(&s)).collect())),
                None => err(col, "the basis symbol must be the last factor"),
            },
            (ModVal::Mod(_), ModVal::Mod(_)) => err(col, "cannot multiply two basis symbols"),
        }
    }
    fn as_scalar(&self, v: &ModVal) -> Option<Scalar> {
        match v {
            ModVal::Alg(a) => elem_scalar(a),
            ModVal::Mod(_) => None,
        }
    }
}

pub fn parse_scalar(text: &str) -> PResult<Scalar> {
    run(&ScalarDom, text, None)
}

/// A polynomial in `z` with scalar coefficients, such as `z^2-1` or `(z-1)^2`.
pub fn parse_poly(text: &str) -> PResult<ZPoly> {
    run(&PolyDom, text, None)
}

pub fn parse_a(ctx: &Arc<AlgebraCtx>, text: &str) -> PResult<AlgElem> {
    match run(&ElemDom { ctx, b: false }, text, Some(Algebra::A))? {
        Either::A(a) => Ok(a),
        Either::B(_) => unreachable!(),
    }
}

pub fn parse_b(ctx: &Arc<AlgebraCtx>, text: &str) -> PResult<BElem> {
    match run(&ElemDom { ctx, b: true }, text, Some(Algebra::B))? {
        Either::B(b) => Ok(b),
        Either::A(_) => unreachable!(),
    }
}

fn parse_module(
    ctx: &Arc<AlgebraCtx>,
    text: &str,
    kind: Algebra,
    basis: &'static [&'static str],
) -> PResult<Vec<AlgElem>> {
    let dom = ModDom { ctx, kind, basis };
    let v = run(&dom, text, Some(kind))?;
    dom.promote(v, 1)
}

/// `a*s+ + b*s-` with `a` of degree -1 and `b` of degree 1.
pub fn parse_spinor(ctx: &Arc<AlgebraCtx>, text: &str) -> PResult<Spinor> {
    let m = parse_module(ctx, text, Algebra::Spinor, &["s+", "s-"])?;
    let [plus, minus]: [AlgElem; 2] = m.try_into().expect("two components");
    Spinor::new(plus, minus).or_else(|e| err(1, e.to_string()))
}

/// `a*w- + b*w0 + c*w+`; a one-form may also be multiplied on the right.
pub fn parse_omega(ctx: &Arc<AlgebraCtx>, text: &str) -> PResult<OmegaElem> {
    let m = parse_module(ctx, text, Algebra::Omega, &["w-", "w0", "w+"])?;
    let [a, b, c]: [AlgElem; 3] = m.try_into().expect("three components");
    Ok(OmegaElem::from_comps(a, b, c))
}

/// `a*xi- + b*xi0 + c*xi+`, the covector taking the values `a, b, c` on
/// `w-, w0, w+`.
pub fn parse_covector(ctx: &Arc<AlgebraCtx>, text: &str) -> PResult<CoVector> {
    let m = parse_module(ctx, text, Algebra::Covector, &["xi-", "xi0", "xi+"])?;
    let [a, b, c]: [AlgElem; 3] = m.try_into().expect("three components");
    Ok(CoVector::new(a, b, c))
}

/// Parses `text` in the given algebra.
pub fn parse_expr(ctx: &Arc<AlgebraCtx>, text: &str, algebra: Algebra) -> PResult<Parsed> {
    Ok(match algebra {
        Algebra::A => Parsed::A(parse_a(ctx, text)?),
        Algebra::B => Parsed::B(parse_b(ctx, text)?),
        Algebra::Spinor => Parsed::Spinor(parse_spinor(ctx, text)?),
        Algebra::Omega => Parsed::Omega(parse_omega(ctx, text)?),
        Algebra::Covector => Parsed::Covector(parse_covector(ctx, text)?),
    })
}
