use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// An exact element of `ℚ(q)`.
///
/// Stored as `q^exp · num / den` with `num(0) ≠ 0`, `den(0) ≠ 0`,
/// `gcd(num, den) = 1` in `ℤ[q]` and `den` having a positive leading
/// coefficient. Zero is `0/1` with `exp = 0`. The representation is canonical,
/// so derived equality and hashing are mathematical equality.
///
/// Splitting off the power of `q` keeps Laurent polynomials (the common case
/// inside the algebra) free of gcd computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    exp: i32,
    num: QPoly,
    den: QPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            exp: 0,
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Scalar {
            exp: 0,
            num: QPoly::constant(n),
            den: QPoly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        Self::from_rational(&BigRational::new_raw(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: &BigRational) -> Result<Self> {
        if r.denom().is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(
            0,
            QPoly::constant(r.numer().clone()),
            QPoly::constant(r.denom().clone()),
        ))
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        Scalar {
            exp: k,
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    /// `num/den` for integer polynomials in `q`.
    pub fn from_polys(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(0, num, den))
    }

    /// Brings `q^exp · num/den` into canonical form.
    fn normalize(mut exp: i32, num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let v = num.q_valuation();
        let w = den.q_valuation();
        exp += v as i32 - w as i32;
        let mut num = num.unshift(v);
        let mut den = den.unshift(w);
        if den.is_constant() {
            let d = den.constant_term();
            let mut g = num.content().gcd(&d);
            if d.is_negative() {
                g = -g;
            }
            num = num.div_exact_int(&g);
            den = QPoly::constant(d / g);
        } else {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
            if den.leading().unwrap().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        Scalar { exp, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_rational(&self) -> bool {
        self.is_zero() || (self.exp == 0 && self.num.is_constant() && self.den.is_constant())
    }

    /// The value as a rational number, when it does not depend on `q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        Some(BigRational::new(
            self.num.constant_term(),
            self.den.constant_term(),
        ))
    }

    /// True when the value is `c·q^k` with `c` an integer.
    pub fn is_integer_monomial(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// Numerator polynomial (powers of `q` folded in).
    pub fn numerator(&self) -> QPoly {
        if self.exp > 0 {
            self.num.shift(self.exp as usize)
        } else {
            self.num.clone()
        }
    }

    /// Denominator polynomial (powers of `q` folded in); positive leading
    /// coefficient.
    pub fn denominator(&self) -> QPoly {
        if self.exp < 0 {
            self.den.shift((-self.exp) as usize)
        } else {
            self.den.clone()
        }
    }

    /// Multiplies by `q^k` without any gcd work.
    pub fn mul_q_pow(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Scalar {
            exp: self.exp + k,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// Substitutes `q ↦ q^k` for `k ≥ 1`.
    pub fn inflate(&self, k: u32) -> Self {
        let k_us = k as usize;
        Self::normalize(
            self.exp * k as i32,
            self.num.inflate(k_us),
            self.den.inflate(k_us),
        )
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar {
            exp: -self.exp,
            num,
            den,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The involution of the coefficient field. `q` is real, so this is the
    /// identity.
    pub fn conj(&self) -> Self {
        self.clone()
    }

    /// Evaluates at `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let mut v = self.num.eval(q0) / d;
        let qp = num_traits::pow::pow(q0.clone(), self.exp.unsigned_abs() as usize);
        if self.exp >= 0 {
            v *= qp;
        } else {
            v /= qp;
        }
        Ok(v)
    }

    /// Whether the leading coefficient of the numerator is negative; used to
    /// pull a minus sign out when printing sums.
    pub fn has_negative_lead(&self) -> bool {
        self.num.leading().is_some_and(Signed::is_negative)
    }

    /// Whether the printed form of this coefficient needs parentheses when it
    /// is followed by `*generator`.
    pub fn needs_parens(&self) -> bool {
        self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
            && self.den.is_one()
            && self.exp >= 0
    }

    pub(crate) fn raw_parts(&self) -> (i32, &QPoly, &QPoly) {
        (self.exp, &self.num, &self.den)
    }
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let e = a.exp.min(b.exp);
    let sa = (a.exp - e) as usize;
    let sb = (b.exp - e) as usize;
    if a.den == b.den {
        let num = a.num.shift(sa).add(&b.num.shift(sb));
        if a.den.is_one() {
            if num.is_zero() {
                return Scalar::zero();
            }
            let v = num.q_valuation();
            return Scalar {
                exp: e + v as i32,
                num: num.unshift(v),
                den: QPoly::one(),
            };
        }
        return Scalar::normalize(e, num, a.den.clone());
    }
    let num = a
        .num
        .shift(sa)
        .mul(&b.den)
        .add(&b.num.shift(sb).mul(&a.den));
    Scalar::normalize(e, num, a.den.mul(&b.den))
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() || b.is_zero() {
        return Scalar::zero();
    }
    let exp = a.exp + b.exp;
    if a.den.is_one() && b.den.is_one() {
        return Scalar {
            exp,
            num: a.num.mul(&b.num),
            den: QPoly::one(),
        };
    }
    let (mut n1, mut d2) = (a.num.clone(), b.den.clone());
    if !d2.is_one() {
        let g = n1.gcd(&d2);
        if !g.is_one() {
            n1 = n1.div_exact(&g);
            d2 = d2.div_exact(&g);
        }
    }
    let (mut n2, mut d1) = (b.num.clone(), a.den.clone());
    if !d1.is_one() {
        let g = n2.gcd(&d1);
        if !g.is_one() {
            n2 = n2.div_exact(&g);
            d1 = d1.div_exact(&g);
        }
    }
    let mut num = n1.mul(&n2);
    let mut den = d1.mul(&d2);
    if den.leading().unwrap().is_negative() {
        num = num.neg();
        den = den.neg();
    }
    Scalar { exp, num, den }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            exp: self.exp,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| add_impl(a, &-b));
forward_binop!(Mul, mul, mul_impl);
// Division panics on a zero divisor, like integer division; use
// `checked_div` when the divisor may vanish.
forward_binop!(Div, div, |a: &Scalar, b: &Scalar| a
    .checked_div(b)
    .expect("Scalar division by zero"));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, &-rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_impl(self, rhs);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl fmt::Display for Scalar {
    /// Prints in the CLI literal grammar, e.g. `q^2+1`, `-1/q`,
    /// `(q^2-1)/(q^2+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        let den = self.denominator();
        let multi = |p: &QPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if den.is_one() {
            return write!(f, "{num}");
        }
        if multi(&num) {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        let den_simple = !multi(&den) && (den.is_constant() || den.leading().unwrap().is_one());
        if den_simple {
            write!(f, "/{den}")
        } else {
            write!(f, "/({den})")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// The q²-integer `[l] = 1 + q² + … + q^(2l-2)`, with `[0] = 0`.
pub fn q_integer(l: u32) -> Scalar {
    if l == 0 {
        return Scalar::zero();
    }
    let mut coeffs = vec![BigInt::zero(); 2 * l as usize - 1];
    for i in 0..l as usize {
        coeffs[2 * i] = BigInt::one();
    }
    Scalar {
        exp: 0,
        num: QPoly::from_coeffs(coeffs),
        den: QPoly::one(),
    }
}

/// Specializes `s` at `q0` and additionally rejects the point when any of the
/// q²-integers `[1]..=[max_l]` vanishes there.
pub fn specialize_guarded(s: &Scalar, q0: &BigRational, max_l: u32) -> Result<BigRational> {
    for l in 1..=max_l {
        if q_integer(l).specialize(q0)?.is_zero() {
            return Err(Error::RootOfUnity(l));
        }
    }
    s.specialize(q0)
}
