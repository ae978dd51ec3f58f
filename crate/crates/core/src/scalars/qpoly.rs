//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients. These are the numerator and denominator building blocks of
//! [`Scalar`](super::Scalar).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `ℤ[q]`, stored with ascending powers and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Largest `k` with `q^k` dividing `self` (0 for the zero polynomial).
    pub fn q_valuation(&self) -> usize {
        self.coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.coeffs.len())
    }

    /// Divides by `q^k`; the caller guarantees `k <= q_valuation()`.
    pub fn unshift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_exact_int(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Substitutes `q ↦ q^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPoly { coeffs }
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) · a mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let off = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[off + i] -= &t * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::from_coeffs(r)
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_exact_int(&c)
    }

    /// Greatest common divisor in `ℤ[q]`, normalized to a positive leading
    /// coefficient. Computed with the primitive remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return QPoly::constant(cont);
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&cont)
    }

    /// Exact quotient; panics in debug builds if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        if dd == 0 {
            return self.div_exact_int(&d.coeffs[0]);
        }
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        debug_assert!(n > dd, "inexact polynomial division");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let (qk, rem) = r[k + dd].div_rem(lc);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            if !qk.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &qk * dc;
                }
            }
            quot[k] = qk;
        }
        debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Self::from_coeffs(quot)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Compares two polynomials by degree, then coefficientwise from the top.
    /// Used only to give [`Scalar`](super::Scalar) a deterministic order.
    pub fn structural_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for QPoly {
    /// Prints in the expression grammar, highest power first: `q^2-3*q+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q-1)(q+1) and (q-1)(q^2+q+1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 0, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[2, 4]);
        let b = p(&[6]);
        assert_eq!(a.gcd(&b), p(&[2]));
        assert_eq!(
            p(&[0]).gcd(&p(&[-3, 3])),
            p(&[-3, 3]).primitive_part().scale(&BigInt::from(3))
        );
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-5, 0, 7, 1]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }

    #[test]
    fn display_grammar() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "q^2-3*q+1");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }

    #[test]
    fn inflate_substitutes_power() {
        assert_eq!(p(&[1, 1]).inflate(2), p(&[1, 0, 1]));
    }
}
