//! Sign of a rational function on the open interval `0 < q < 1`, decided
//! exactly with Sturm sequences.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use super::Scalar;

type RPoly = Vec<BigRational>;

fn trim(p: &mut RPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &RPoly) -> RPoly {
    let mut d: RPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(i.into()))
        .collect();
    trim(&mut d);
    d
}

fn rem(a: &RPoly, b: &RPoly) -> RPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() > db && !r.is_empty() {
        let t = r.last().unwrap() / lb;
        let off = r.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            r[off + i] -= &t * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn eval(p: &RPoly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(seq: &[RPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the open interval `(0, 1)`.
pub(crate) fn roots_in_unit_interval(p: &QPoly) -> usize {
    let f: RPoly = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    if f.len() <= 1 {
        return 0;
    }
    let mut seq = vec![f.clone(), derivative(&f)];
    loop {
        let n = seq.len();
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut lo = zero.clone();
    if eval(&f, &zero).is_zero() {
        // shift the left endpoint past 0 without skipping a root
        lo = BigRational::new(1.into(), 1_000_000_000.into());
        while eval(&f, &lo).is_zero() {
            lo /= BigRational::from_integer(2.into());
        }
    }
    let count = sign_changes(&seq, &lo) - sign_changes(&seq, &one);
    count - usize::from(eval(&f, &one).is_zero())
}

/// The sign of `s` if it is strictly positive or strictly negative for every
/// `q` in `(0, 1)`; `None` if it vanishes, has a pole, or changes sign there.
pub fn sign_on_unit_interval(s: &Scalar) -> Option<Ordering> {
    if s.is_zero() {
        return None;
    }
    let (_, num, den) = s.raw_parts();
    if roots_in_unit_interval(num) > 0 || roots_in_unit_interval(den) > 0 {
        return None;
    }
    let half = BigRational::new(1.into(), 2.into());
    let v = s.specialize(&half).ok()?;
    Some(if v.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_roots() {
        // (2q-1)(3q-1)
        assert_eq!(roots_in_unit_interval(&QPoly::from_i64s(&[1, -5, 6])), 2);
        // q^2 + 1 has no real roots
        assert_eq!(roots_in_unit_interval(&QPoly::from_i64s(&[1, 0, 1])), 0);
        // (q-1)^2 touches 1 only at the closed endpoint
        assert_eq!(roots_in_unit_interval(&QPoly::from_i64s(&[1, -2, 1])), 0);
        // (2q-1)^2: one distinct root
        assert_eq!(roots_in_unit_interval(&QPoly::from_i64s(&[1, -4, 4])), 1);
    }

    #[test]
    fn signs() {
        let q = Scalar::q();
        assert_eq!(
            sign_on_unit_interval(&-Scalar::q_pow(-3)),
            Some(Ordering::Less)
        );
        assert_eq!(
            sign_on_unit_interval(&(Scalar::one() - &q)),
            Some(Ordering::Greater)
        );
        let half = Scalar::from_ratio(1, 2).unwrap();
        assert_eq!(sign_on_unit_interval(&(&q - &half)), None);
        assert_eq!(sign_on_unit_interval(&Scalar::zero()), None);
    }
}
