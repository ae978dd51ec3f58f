//! A naive word-rewriting normalizer, kept as an independent oracle for the
//! closed-form product.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ctx::AlgebraCtx;
use super::elem::{AlgElem, BElem};
use super::monomial::{add_term, AMonomial, BMonomial};
use crate::scalars::{Scalar, ZPoly};

/// A generator of `A(p;q)` (`XPlus`, `XMinus`, `ZPlus`, `ZMinus`) or of
/// `B(p;q)` (`X`, `Y`, `Z`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    XPlus,
    XMinus,
    ZPlus,
    ZMinus,
    X,
    Y,
    Z,
}

impl Gen {
    pub const A: [Gen; 4] = [Gen::XPlus, Gen::XMinus, Gen::ZPlus, Gen::ZMinus];
    pub const B: [Gen; 3] = [Gen::X, Gen::Y, Gen::Z];

    pub fn degree(self) -> i64 {
        match self {
            Gen::XPlus | Gen::ZPlus => 1,
            Gen::XMinus | Gen::ZMinus => -1,
            Gen::X | Gen::Y | Gen::Z => 0,
        }
    }

    pub fn to_a(self, ctx: &Arc<AlgebraCtx>) -> Option<AlgElem> {
        Some(match self {
            Gen::XPlus => AlgElem::x_plus(ctx),
            Gen::XMinus => AlgElem::x_minus(ctx),
            Gen::ZPlus => AlgElem::z_plus(ctx),
            Gen::ZMinus => AlgElem::z_minus(ctx),
            _ => return None,
        })
    }

    pub fn to_b(self, ctx: &Arc<AlgebraCtx>) -> Option<BElem> {
        Some(match self {
            Gen::X => BElem::x(ctx),
            Gen::Y => BElem::y(ctx),
            Gen::Z => BElem::z(ctx),
            _ => return None,
        })
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Gen::XPlus => "x+",
            Gen::XMinus => "x-",
            Gen::ZPlus => "z+",
            Gen::ZMinus => "z-",
            Gen::X => "x",
            Gen::Y => "y",
            Gen::Z => "z",
        };
        write!(f, "{s}")
    }
}

/// Which redex to contract at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

type Word = Vec<Gen>;

fn z_words(f: &ZPoly, a_alphabet: bool) -> Vec<(Scalar, Word)> {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let w = if a_alphabet {
                let mut w = vec![Gen::ZPlus; k];
                w.extend(std::iter::repeat_n(Gen::ZMinus, k));
                w
            } else {
                vec![Gen::Z; k]
            };
            (c.clone(), w)
        })
        .collect()
}

/// Replacement for the adjacent pair `ab`, or `None` if `ab` is not a redex.
fn rule(ctx: &AlgebraCtx, a: Gen, b: Gen) -> Option<Vec<(Scalar, Word)>> {
    use Gen::*;
    let swap = |k: i32| Some(vec![(Scalar::q_pow(k), vec![b, a])]);
    match (a, b) {
        (ZPlus | ZMinus, XPlus) => swap(1),
        (ZPlus | ZMinus, XMinus) => swap(-1),
        (ZMinus, ZPlus) => swap(0),
        (XPlus, XMinus) => Some(z_words(ctx.p(), true)),
        (XMinus, XPlus) => Some(z_words(&ctx.p().rescale_q_pow(2), true)),
        (Z, Y) => swap(2),
        (Z, X) => swap(-2),
        (X, Y) => Some(z_words(&ctx.p().shift(1).rescale_q_pow(2), false)),
        (Y, X) => Some(z_words(&ctx.p().shift(1), false)),
        _ => None,
    }
}

/// Rewrites `Σ c·word` until no redex remains and returns the normal words.
pub fn rewrite_words(
    ctx: &AlgebraCtx,
    start: Vec<(Scalar, Word)>,
    strategy: Strategy,
) -> BTreeMap<Word, Scalar> {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pending = start;
    let mut done = BTreeMap::new();
    while let Some((c, w)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        let redexes: Vec<(usize, Vec<(Scalar, Word)>)> = (0..w.len().saturating_sub(1))
            .filter_map(|i| rule(ctx, w[i], w[i + 1]).map(|r| (i, r)))
            .collect();
        if redexes.is_empty() {
            add_term(&mut done, w, c);
            continue;
        }
        let pick = match (strategy, rng.as_mut()) {
            (Strategy::Leftmost, _) => 0,
            (Strategy::Rightmost, _) => redexes.len() - 1,
            (Strategy::Random(_), Some(r)) => r.gen_range(0..redexes.len()),
            (Strategy::Random(_), None) => unreachable!(),
        };
        let (i, replacement) = &redexes[pick];
        for (rc, rw) in replacement {
            let mut nw = Vec::with_capacity(w.len() + rw.len());
            nw.extend_from_slice(&w[..*i]);
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[i + 2..]);
            pending.push((&c * rc, nw));
        }
    }
    done
}

fn normal_a_word(w: &[Gen]) -> AMonomial {
    let mut m = AMonomial::new(0, 0, 0);
    for g in w {
        match g {
            Gen::XPlus => m.x += 1,
            Gen::XMinus => m.x -= 1,
            Gen::ZPlus => m.zplus += 1,
            Gen::ZMinus => m.zminus += 1,
            _ => panic!("generator {g} does not belong to A(p;q)"),
        }
    }
    m
}

fn normal_b_word(w: &[Gen]) -> BMonomial {
    let mut m = BMonomial::new(0, 0);
    for g in w {
        match g {
            Gen::Y => m.xy += 1,
            Gen::X => m.xy -= 1,
            Gen::Z => m.z += 1,
            _ => panic!("generator {g} does not belong to B(p;q)"),
        }
    }
    m
}

/// Normal form of `c·word` in `A(p;q)` by rewriting.
pub fn normalize_a(ctx: &Arc<AlgebraCtx>, c: Scalar, word: &[Gen], strategy: Strategy) -> AlgElem {
    let done = rewrite_words(ctx, vec![(c, word.to_vec())], strategy);
    AlgElem::from_terms(ctx, done.into_iter().map(|(w, c)| (normal_a_word(&w), c)))
}

/// Normal form of `c·word` in `B(p;q)` by rewriting.
pub fn normalize_b(ctx: &Arc<AlgebraCtx>, c: Scalar, word: &[Gen], strategy: Strategy) -> BElem {
    let done = rewrite_words(ctx, vec![(c, word.to_vec())], strategy);
    BElem::from_terms(ctx, done.into_iter().map(|(w, c)| (normal_b_word(&w), c)))
}

/// The word spelling a normal-form monomial of `A(p;q)`.
pub fn a_word(m: &AMonomial) -> Vec<Gen> {
    let xg = if m.x > 0 { Gen::XPlus } else { Gen::XMinus };
    let mut w = vec![xg; m.xexp() as usize];
    w.extend(std::iter::repeat_n(Gen::ZPlus, m.zplus as usize));
    w.extend(std::iter::repeat_n(Gen::ZMinus, m.zminus as usize));
    w
}

/// The word spelling a normal-form monomial of `B(p;q)`.
pub fn b_word(m: &BMonomial) -> Vec<Gen> {
    let g = if m.xy > 0 { Gen::Y } else { Gen::X };
    let mut w = vec![g; m.xyexp() as usize];
    w.extend(std::iter::repeat_n(Gen::Z, m.z as usize));
    w
}

/// Normal form of a word in `A(p;q)` via the closed-form product.
pub fn multiply_out_a(ctx: &Arc<AlgebraCtx>, word: &[Gen]) -> AlgElem {
    word.iter().fold(AlgElem::one(ctx), |acc, g| {
        acc * g.to_a(ctx).expect("generator of A(p;q)")
    })
}

/// Normal form of a word in `B(p;q)` via the closed-form product.
pub fn multiply_out_b(ctx: &Arc<AlgebraCtx>, word: &[Gen]) -> BElem {
    word.iter().fold(BElem::one(ctx), |acc, g| {
        acc * g.to_b(ctx).expect("generator of B(p;q)")
    })
}
