//! Laurent polynomials in `q` with machine-integer coefficients, used as an
//! accumulator on the hot path of element multiplication. Every operation is
//! overflow-checked; a `None` sends the caller back to exact [`Scalar`]s.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::qpoly::QPoly;
use super::Scalar;

/// `Σ c[i]·q^{lo+i}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct SmallLaurent {
    lo: i32,
    c: Vec<i64>,
}

impl SmallLaurent {
    pub(crate) fn from_scalar(s: &Scalar) -> Option<Self> {
        let (exp, num, den) = s.raw_parts();
        if !den.is_one() {
            return None;
        }
        let c = num
            .coeffs()
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<_>>>()?;
        Some(SmallLaurent { lo: exp, c })
    }

    pub(crate) fn to_scalar(&self) -> Scalar {
        let num = QPoly::from_coeffs(self.c.iter().map(|&v| BigInt::from(v)).collect());
        Scalar::from_polys(num, QPoly::one())
            .expect("unit denominator")
            .mul_q_pow(self.lo)
    }

    /// `self += a·b·q^shift`.
    pub(crate) fn add_product(&mut self, a: &Self, b: &Self, shift: i32) -> Option<()> {
        if a.c.is_empty() || b.c.is_empty() {
            return Some(());
        }
        let lo = a.lo + b.lo + shift;
        let len = a.c.len() + b.c.len() - 1;
        self.cover(lo, len);
        let off = (lo - self.lo) as usize;
        for (i, x) in a.c.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                let slot = &mut self.c[off + i + j];
                *slot = slot.checked_add(x.checked_mul(*y)?)?;
            }
        }
        Some(())
    }

    fn cover(&mut self, lo: i32, len: usize) {
        if self.c.is_empty() {
            self.lo = lo;
            self.c = vec![0; len];
            return;
        }
        if lo < self.lo {
            let extra = (self.lo - lo) as usize;
            self.c.splice(0..0, std::iter::repeat_n(0, extra));
            self.lo = lo;
        }
        let need = (lo - self.lo) as usize + len;
        if need > self.c.len() {
            self.c.resize(need, 0);
        }
    }
}
