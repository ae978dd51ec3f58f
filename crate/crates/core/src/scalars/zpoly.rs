use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// A polynomial in the central variable `z` with [`Scalar`] coefficients.
///
/// Index `i` of the coefficient list is the coefficient of `z^i`; there are
/// no trailing zeros, so the zero polynomial has an empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<Scalar>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `z ↦ c·z`.
    pub fn rescale_var(&self, c: &Scalar) -> Self {
        let mut pow = Scalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow = &pow * c;
        }
        Self::from_coeffs(out)
    }

    /// Substitutes `z ↦ q^k·z`; cheaper than [`rescale_var`](Self::rescale_var).
    pub fn rescale_q_pow(&self, k: i32) -> Self {
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a.mul_q_pow(k * i as i32))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Divides by `z`; `None` unless the constant term vanishes.
    pub fn div_z(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(ZPoly {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Euclidean division over `ℚ(q)`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.leading().unwrap().recip()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let t = &r[k + dd] * &lc_inv;
            if !t.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = &r[k + i] - &(&t * dc);
                }
            }
            quot[k] = t;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(r)))
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd over `ℚ(q)`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        self.ext_gcd(other).0
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g` and `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&quo * &s1);
            let t2 = &t0 - &(&quo * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.recip().expect("nonzero leading coefficient");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// `(p(b·z) − p(z)) / ((b − 1)·z)`.
    pub fn q_derivative(&self, base: &Scalar) -> Result<Self> {
        let bm1 = base - &Scalar::one();
        if bm1.is_zero() {
            return Err(Error::DegenerateBase);
        }
        let inv = bm1.recip()?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut bk = base.clone();
        for a in self.coeffs.iter().skip(1) {
            out.push(a * &(&(&bk - &Scalar::one()) * &inv));
            bk = &bk * base;
        }
        Ok(Self::from_coeffs(out))
    }

    /// `c(z) = q · p_{q²}(z)`.
    pub fn c_poly(&self) -> Self {
        self.q_derivative(&Scalar::q_pow(2))
            .expect("q² is never 1")
            .scale(&Scalar::q())
    }

    /// `(p(0) − p(z)) / z`, an exact division.
    pub fn drop_constant_over_z(&self) -> Self {
        let mut d = -self;
        if !d.is_zero() {
            d.coeffs[0] = Scalar::zero();
        }
        Self::from_coeffs(d.coeffs)
            .div_z()
            .expect("constant term removed")
    }

    /// `μ_0, …, μ_{n−1}` with `p / lc(p) = z^n − Σ μ_i z^i`.
    pub fn monic_tail(&self) -> Vec<Scalar> {
        let m = self.monic();
        let n = m.coeffs.len().saturating_sub(1);
        m.coeffs[..n].iter().map(|c| -c).collect()
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ZPoly::from_coeffs(out)
    }
}

impl fmt::Display for ZPoly {
    /// Prints in the expression grammar with `z` as the variable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Scalar, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let m = match k {
                    0 => String::new(),
                    1 => "z".to_string(),
                    _ => format!("z^{k}"),
                };
                (c.clone(), m)
            })
            .collect();
        crate::fmt_util::write_sum(f, &terms)
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

/// Bézout data witnessing that `p` is q²-separable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityCertificate {
    /// `f·p + g·z·p_{q²} = 1`.
    pub f: ZPoly,
    pub g: ZPoly,
    /// `f0·z + g0·p = 1`.
    pub f0: ZPoly,
    pub g0: ZPoly,
}

/// Decides q²-separability of `p`, returning Bézout cofactors when it holds.
pub fn q2_separability(p: &ZPoly) -> Result<Option<SeparabilityCertificate>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zpd = p.q_derivative(&Scalar::q_pow(2))?.shift(1);
    let (g, f, gg) = p.ext_gcd(&zpd);
    if g.degree() != Some(0) {
        return Ok(None);
    }
    let (g0, g0p, f0) = p.ext_gcd(&ZPoly::z());
    debug_assert_eq!(g0, ZPoly::one());
    Ok(Some(SeparabilityCertificate {
        f,
        g: gg,
        f0,
        g0: g0p,
    }))
}

pub fn is_q2_separable(p: &ZPoly) -> Result<bool> {
    Ok(q2_separability(p)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn q_derivative_examples() {
        let q2 = Scalar::q_pow(2);
        let p = ZPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(
            p.q_derivative(&q2).unwrap(),
            ZPoly::monomial(&q2 + &Scalar::one(), 1)
        );
        assert!(ZPoly::from_ints(&[7]).q_derivative(&q2).unwrap().is_zero());
        assert_eq!(
            ZPoly::from_ints(&[1, -1]).q_derivative(&q2).unwrap(),
            ZPoly::from_ints(&[-1])
        );
        assert_eq!(p.q_derivative(&Scalar::one()), Err(Error::DegenerateBase));
    }

    #[test]
    fn c_poly_examples() {
        let p = ZPoly::from_ints(&[-1, 0, 1]);
        let expect = &q() * &(Scalar::q_pow(2) + Scalar::one());
        assert_eq!(p.c_poly(), ZPoly::monomial(expect, 1));
        assert_eq!(ZPoly::from_ints(&[1, -1]).c_poly(), ZPoly::constant(-q()));
        assert!(ZPoly::from_ints(&[5]).c_poly().is_zero());
    }

    #[test]
    fn separability_examples() {
        assert!(!is_q2_separable(&ZPoly::z()).unwrap());
        assert!(is_q2_separable(&ZPoly::from_ints(&[1, -1])).unwrap());
        // (z-1)^2 is q²-separable although it has a repeated root
        assert!(is_q2_separable(&ZPoly::from_ints(&[1, -2, 1])).unwrap());
        assert_eq!(is_q2_separable(&ZPoly::zero()), Err(Error::ZeroPolynomial));
        // constant p: trivially separable
        assert!(is_q2_separable(&ZPoly::from_ints(&[3])).unwrap());
    }

    #[test]
    fn certificates_remultiply() {
        for cs in [
            &[1, -1][..],
            &[-1, 0, 1],
            &[1, -2, 1],
            &[-1, -1, 0, 1],
            &[4],
        ] {
            let p = ZPoly::from_ints(cs);
            let c = q2_separability(&p).unwrap().unwrap();
            let zpd = p.q_derivative(&Scalar::q_pow(2)).unwrap().shift(1);
            assert_eq!(&(&c.f * &p) + &(&c.g * &zpd), ZPoly::one(), "p = {p}");
            assert_eq!(
                &(&c.f0 * &ZPoly::z()) + &(&c.g0 * &p),
                ZPoly::one(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = ZPoly::from_coeffs(vec![
            q(),
            Scalar::from_int(3),
            Scalar::q_pow(-2),
            Scalar::one(),
        ]);
        let b = ZPoly::from_coeffs(vec![Scalar::from_int(2), q()]);
        let (quo, rem) = a.div_rem(&b).unwrap();
        assert_eq!(&(&quo * &b) + &rem, a);
        assert!(rem.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn display() {
        let p = ZPoly::from_coeffs(vec![-Scalar::one(), Scalar::zero(), &q() + &Scalar::one()]);
        assert_eq!(p.to_string(), "(q+1)*z^2 - 1");
    }
}
